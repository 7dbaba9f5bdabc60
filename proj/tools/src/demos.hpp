#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hoagent::cli {

/// Names accepted by `demo`, in presentation order.
const std::vector<std::string>& demo_names();

/// Writes the named demo's narrative report. Throws Error(UnknownDemo).
void run_demo(const std::string& name, std::ostream& out);

}  // namespace hoagent::cli
