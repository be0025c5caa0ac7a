#pragma once

// Machine-readable reports behind the rspin command-line tool, and the text
// rendering of those reports. Text is always rendered from the JSON document,
// so the two forms carry the same content.

#include <optional>
#include <string>

#include <json.hpp>

#include "rspin/classes.hpp"

namespace rspin::report {

using json = nlohmann::ordered_json;

struct Query {
  Int r;
  Int g;
  std::optional<int> eps;
  bool force = false;
};

classes::ModuliContext make_context(const Query& q);

json build_report(const Query& q);
json build_eval(const Query& q, const std::string& expression);
json build_theta(const Query& q);
json build_twist(const Query& q, std::optional<int> arf, const Int& beta,
                 const std::string& expression);
json build_table(const Int& r_min, const Int& r_max);

/// Exit code implied by a finished report (4 when it records an
/// internal-consistency failure, 0 otherwise).
ExitCode exit_code_of(const json& report);

std::string render_text(const json& report, bool color = false);

}  // namespace rspin::report
