#include "hashshift/report.hpp"

#include <iomanip>
#include <sstream>

namespace hashshift {

std::string to_line(const CheckReport& r) {
  const char* status = "PASS";
  if (r.status == CheckReport::Status::Fail) status = "FAIL";
  if (r.status == CheckReport::Status::Skip) status = "SKIP";
  std::ostringstream os;
  os << status << ' ' << r.name;
  if (!r.detail.empty()) os << ": " << r.detail;
  os << " [" << std::fixed << std::setprecision(1) << r.millis << " ms]";
  return os.str();
}

}  // namespace hashshift
