#include "semwidth/limits.hpp"

#include "semwidth/errors.hpp"

#include <cstdlib>
#include <string>

namespace semwidth {

SizeLimits SizeLimits::from_env() {
  SizeLimits limits;
  const char* raw = std::getenv("SEMWIDTH_LIMITS");
  if (raw == nullptr) return limits;
  std::string text(raw);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("SEMWIDTH_LIMITS: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("SEMWIDTH_LIMITS: bad value in '" + item + "'");
    }
    if (value < 0) throw ParseError("SEMWIDTH_LIMITS: negative limit in '" + item + "'");
    if (key == "tw")
      limits.tw = value;
    else if (key == "ghw")
      limits.ghw = value;
    else if (key == "fhw")
      limits.fhw = value;
    else if (key == "hw")
      limits.hw = value;
    else
      throw ParseError("SEMWIDTH_LIMITS: unknown key '" + key + "'");
  }
  return limits;
}

}  // namespace semwidth
