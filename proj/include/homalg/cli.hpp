#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "homalg/defect.hpp"
#include "homalg/structure_io.hpp"

namespace homalg {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitInconclusive = 3,
};

struct CheckReport {
  std::string structure;
  std::string check;
  bool holds = true;  // true iff witnesses is empty
  std::vector<Witness> witnesses;
};

// Suite names: hom-assoc, unital, coassoc, counital, G1..G6, lie-admissible,
// hom-lie, bialgebra-weak, bialgebra-strict, module, comodule, antipode.
// An empty list selects the defaults for the kind. Throws UsageError for
// unknown suites or suites that do not apply to the kind.
std::vector<CheckReport> run_suites(const StructureFile& f, const std::string& id, const std::vector<std::string>& suites);
void print_report(std::ostream& os, const CheckReport& r);

// args excludes the program name. A structure argument is a file path or
// registry:NAME together with --param bindings.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace homalg
