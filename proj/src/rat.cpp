#include "unmix/rat.hpp"

namespace unmix {

Rat Rat::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat: cannot parse \"" + s + "\"");
  }
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace unmix
