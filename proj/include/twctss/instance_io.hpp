#pragma once

#include <string>
#include <string_view>

#include "twctss/instance.hpp"

namespace twctss {

/// Parses the text format
///
///     twctss 1
///     n <N>
///     lambda <L>
///     thresholds <t0> ... <tN-1>
///     edges <M>
///     <u> <v>        (M lines)
///
/// or its JSON mirror {"version":1,"n":..,"lambda":..,"thresholds":[..],
/// "edges":[[u,v],..]}. '#' starts a comment in the text form. Throws
/// ParseError on malformed input, count mismatches, out-of-range ids and
/// duplicate edges.
Instance parse_instance(std::string_view text);

/// Canonical text form: sorted edges, fixed field order, trailing newline.
std::string serialize_instance(const Instance& instance);

Instance read_instance_file(const std::string& path);

}  // namespace twctss
