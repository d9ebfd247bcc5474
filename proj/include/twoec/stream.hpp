#pragma once

#include <string>

#include "twoec/inc_scc.hpp"

namespace twoec {

struct StreamOptions {
    SccEngine engine = SccEngine::TwoWay;
    // Recompute every answer from scratch and fail on any divergence.
    // Limited to small graphs; enforced at the `graph` command.
    bool oracle_check = false;
    // Append `# metric name value` lines after the last answer.
    bool metrics = false;
};

struct StreamResult {
    std::string output;
    std::string error;  // line-numbered diagnostic when exit_code != 0
    int exit_code = 0;  // 0 ok, 1 parse or contract error, 2 oracle mismatch
};

// Text protocol driver. Commands, one per line, `#` starts a comment:
//   graph n                  must come first, vertices are 1..n
//   insert u v               answers `noop u v` when the edge is a self-loop
//                            or already present, otherwise silent
//   query2ec u v             answers `2ec u v true|false`; a false answer
//                            carries ` witness a b` when u and v share an SCC
//                            and ` nsc` otherwise
//   blocks                   answers `blocks k` plus one `block ...` line per
//                            block, ordered by smallest member
//   bridges                  answers one `bridge a b` line per current strong
//                            bridge, lexicographic
StreamResult run_stream(const std::string& input, const StreamOptions& opt = {});

// Runs only the graph/insert commands of the stream, then prints both
// dominator trees of every component that has one. Components come in
// ascending order of their smallest member; per tree a `tree fwd|rev s`
// header is followed by one line per member vertex, ascending:
//   v d(v) depth(v) r(v) bridge?
// in global vertex ids, with d(s) = 0 for the start vertex.
StreamResult dump_dominators(const std::string& input, const StreamOptions& opt = {});

}  // namespace twoec
