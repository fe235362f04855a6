#pragma once

/// Command-line dispatch.  Every public operation is reachable from
/// exactly one subcommand:
///
///   cf eval <b1,b2,...>          value of a coefficient list
///   cf expand <p/q>              ceiling-type expansion
///   cf normalize <p/q>           parity normal form + move witness
///   twist word <p/q>             twist word, braid image, F2 exponent
///   twist is-trivial <p/q>       nontriviality report (faithfulness test)
///   braid burau "<word>"         Burau matrix of a braid word
///   inv alexander <p/q>          two-bridge closed form (+ pattern braid
///                                closure when a normal form exists)
///   inv torus-link <n>           two-variable torus-link polynomial
///   inv basic-classes <n>        basic class set + pairing check
///   inv genus <a> <b>            torus-knot genus
///   form show <name>             a standard or double form
///   form classify <p/q>          plug / g-cork dichotomy with certificate
///   form isometries <name> --bound B [--shape S]
///                                bounded isometry enumeration
///   obstruct certify <m> <n>     adjunction-defect certificate
///
/// Global `--format {text|json}` (default text).  JSON output is
/// key-sorted and byte-stable across runs.

#include <string>
#include <vector>

#include <json.hpp>

namespace twistcalc::cli {

enum class Status { ok, user_error, inconclusive };

struct CommandResult {
    Status status = Status::ok;
    nlohmann::json payload;              ///< structured result (or {"error": ...})
    std::string format = "text";         ///< chosen rendering
    std::string override_text;           ///< verbatim text output (help screens)
    std::vector<std::string> warnings;   ///< rendered to stderr
};

/// Routes argv (without the program name) to the matching operation.
CommandResult dispatch(const std::vector<std::string>& args);

/// 0 for ok, 1 for user_error, 2 for inconclusive.
int exit_code(Status s);

/// Deterministic flat "key.path: value" rendering of a JSON payload.
std::string render_text(const nlohmann::json& payload);

/// Renders per result.format (and override_text).
std::string render(const CommandResult& result);

}  // namespace twistcalc::cli
