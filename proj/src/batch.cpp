#include "folsurf/batch.hpp"

#include <fstream>

namespace folsurf {

std::vector<std::string> read_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string t = line.substr(a, b - a + 1);
        if (t.empty() || t[0] == '#') continue;
        lines.push_back(std::move(t));
    }
    return lines;
}

Json process_germ_line(const std::string& line, StopCriterion stop, int max_depth) {
    Json j{{"input", line}};
    try {
        PlaneGerm v = PlaneGerm::parse(line);
        j["result"] = reduce_report_json(v, seidenberg_reduce(v, max_depth, stop));
    } catch (const InputError& e) {
        j["error"] = Json{{"type", "input"}, {"message", e.what()}};
    } catch (const DomainError& e) {
        j["error"] = Json{{"type", "domain"}, {"message", e.what()}};
    }
    return j;
}

std::vector<Json> process_corpus_serial(const std::vector<std::string>& lines,
                                        StopCriterion stop, int max_depth) {
    std::vector<Json> out(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        out[i] = process_germ_line(lines[i], stop, max_depth);
    return out;
}

std::vector<Json> process_corpus_parallel(const std::vector<std::string>& lines,
                                          StopCriterion stop, int max_depth) {
    std::vector<Json> out(lines.size());
    long n = static_cast<long>(lines.size());
#ifdef FOLSURF_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < n; ++i) out[i] = process_germ_line(lines[i], stop, max_depth);
    return out;
}

}  // namespace folsurf
