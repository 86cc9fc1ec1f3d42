// Compares the serial corpus driver against the OpenMP one on identical
// input and checks that their outputs agree byte for byte.
#include <chrono>
#include <iostream>
#include <string>

#include "folsurf/batch.hpp"

#ifdef FOLSURF_HAVE_OPENMP
#include <omp.h>
#endif

using namespace folsurf;

namespace {

template <class F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: bench_corpus corpus.txt [repeat]\n";
        return 2;
    }
    int repeat = argc > 2 ? std::stoi(argv[2]) : 3;
    try {
        auto lines = read_corpus(argv[1]);
        std::cout << "corpus: " << argv[1] << " (" << lines.size() << " germs)\n";
#ifdef FOLSURF_HAVE_OPENMP
        std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
        std::cout << "threads: 1 (built without OpenMP)\n";
#endif
        std::vector<Json> ref, par;
        double t_serial = 0, t_parallel = 0;
        for (int r = 0; r < repeat; ++r) {
            t_serial += timed([&] { ref = process_corpus_serial(lines); });
            t_parallel += timed([&] { par = process_corpus_parallel(lines); });
        }
        t_serial /= repeat;
        t_parallel /= repeat;
        bool agree = ref.size() == par.size();
        for (std::size_t i = 0; agree && i < ref.size(); ++i)
            agree = ref[i].dump() == par[i].dump();
        std::cout.setf(std::ios::fixed);
        std::cout.precision(4);
        std::cout << "serial:   " << t_serial << " s\n";
        std::cout << "parallel: " << t_parallel << " s\n";
        std::cout << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
        std::cout << "outputs identical: " << (agree ? "yes" : "NO") << "\n";
        return agree ? 0 : 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    }
}
