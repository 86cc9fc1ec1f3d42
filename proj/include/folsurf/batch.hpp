#pragma once

#include <string>
#include <vector>

#include "folsurf/json_io.hpp"

namespace folsurf {

// Non-empty, non-comment lines of a newline-delimited germ corpus.
std::vector<std::string> read_corpus(const std::string& path);

// Full reduce report for one germ expression; errors are captured in the
// returned object instead of thrown, so corpus entries stay isolated.
Json process_germ_line(const std::string& line, StopCriterion stop = StopCriterion::Reduced,
                       int max_depth = 64);

std::vector<Json> process_corpus_serial(const std::vector<std::string>& lines,
                                        StopCriterion stop = StopCriterion::Reduced,
                                        int max_depth = 64);

// OpenMP over corpus entries; identical output to the serial reference and
// equal to it when built without OpenMP.
std::vector<Json> process_corpus_parallel(const std::vector<std::string>& lines,
                                          StopCriterion stop = StopCriterion::Reduced,
                                          int max_depth = 64);

}  // namespace folsurf
