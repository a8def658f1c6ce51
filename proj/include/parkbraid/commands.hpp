#pragma once

// The CLI verbs as plain functions: parsed arguments in, output text out.
// Reading files and printing errors is left to main.

#include <string>
#include <string_view>

#include "parkbraid/json_io.hpp"
#include "parkbraid/render.hpp"
#include "parkbraid/verify.hpp"

namespace parkbraid {

struct CommandOutput {
  std::string text;
  int exit_code = 0;
};

/// direction: pf-to-basis, basis-to-pf, or auto (chosen by which field is
/// present). Adds "verified": the round trip reproduced the input.
Json cmd_convert(const Json& input, std::string_view direction);

/// kind: pf, bases, nondecreasing, chains. Newline-delimited JSON, or one
/// line with the count. `max_n` <= 0 selects the default limit for the kind.
/// Throws Error("limit_exceeded").
std::string cmd_enumerate(int n, std::string_view kind, bool count_only, int max_n = 0);
int default_enumerate_limit(std::string_view kind);

/// Input is a basis or a parking function; the output carries both forms of
/// the result and the order of each alpha_k on the input.
Json cmd_braid(const Json& input, std::string_view word);

/// format: dot or json.
std::string cmd_orbit(int n, std::string_view format);

/// Input: a basis or parking function for arcs, diagram and table; {"n": n}
/// for orbit. Throws Error("unsupported_render").
std::string cmd_render(const Json& input, RenderSpec spec);

/// Hom/Ext matrices of the exceptional sequence of a basis.
Json cmd_quiver(const Json& input);

/// direction: to-chain (basis or pf in), to-basis (chain in), or auto.
Json cmd_nc(const Json& input, std::string_view direction);

/// Exit code 0 iff every check passes. Throws Error("limit_exceeded") above
/// `max_n`.
CommandOutput cmd_verify(int n, std::string_view suite, bool inject_fault, int max_n = 7);

}  // namespace parkbraid
