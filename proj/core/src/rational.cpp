#include "spl/rational.hpp"

#include <cstdlib>

namespace spl {

Rat Rat::parse(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      size_t pos = 0;
      long long n = std::stoll(s, &pos);
      require(pos == s.size(), Errc::parse_error, "bad rational: " + s);
      return Rat(n);
    }
    size_t p1 = 0, p2 = 0;
    long long n = std::stoll(s.substr(0, slash), &p1);
    long long d = std::stoll(s.substr(slash + 1), &p2);
    require(p1 == slash && p2 == s.size() - slash - 1, Errc::parse_error,
            "bad rational: " + s);
    return Rat(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "bad rational: " + s);
  }
}

}  // namespace spl
