#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "toricoh/cohomology.hpp"

namespace toricoh {

// Named example fans: p2, p1xp1, c2, p1xc, line, three-quadrants, and the
// family hirzebruch:<a> with a >= 0. Unknown names raise UnknownName.
Fan builtin_fan(const std::string& name);

// The builtin names exercised by the regression corpus.
std::vector<std::string> builtin_corpus();

struct AnalyzeOptions {
  std::optional<Coord> max_degree;  // emit graded dimensions for d = 0..max_degree
};

// Full analysis document. Key order is fixed and every value is integral,
// so the serialized form is byte-stable across runs.
nlohmann::ordered_json analysis_json(const std::string& input_label, const Fan& f,
                                     const AnalyzeOptions& opts = {});
std::string analysis_text(const std::string& input_label, const Fan& f,
                          const AnalyzeOptions& opts = {});

// Completion summary document for the complete subcommand.
nlohmann::ordered_json completion_json(const std::string& input_label, const Fan& f);

}  // namespace toricoh
