// Scratch benchmark for completion times across desk-scale instances.
#include <chrono>
#include <iostream>

#include "weakq/presentation.hpp"
#include "weakq/rewrite.hpp"

using namespace weakq;

static void bench(const std::string& type, const std::string& dseq, int bound) {
    CartanData c = cartan_by_name(type);
    TypeSequence d = TypeSequence::parse(dseq, c.n);
    Presentation p = build_relations(c, d);
    auto t0 = std::chrono::steady_clock::now();
    RewriteSystem sys = make_system(p, bound);
    auto t1 = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    auto bad = failing_relations(sys);
    std::cout << type << " d=" << dseq << " L=" << bound << ": " << sys.rules().size()
              << " rules in " << ms << " ms, relations->0: " << (bad.empty() ? "ok" : "FAIL")
              << std::endl;
    // quotient
    t0 = std::chrono::steady_clock::now();
    RewriteSystem q = quotient_J1(sys);
    t1 = std::chrono::steady_clock::now();
    ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cout << "  quotient: " << q.rules().size() << " rules in " << ms << " ms" << std::endl;
}

int main(int argc, char** argv) {
    int L = argc > 1 ? std::atoi(argv[1]) : 8;
    bench("A1", "1|1", L);
    bench("A1", "0|0", L);
    bench("A2", "11|11", L);
    bench("A2", "00|00", L);
    bench("A2", "10|01", L);
    bench("B2", "11|11", L);
    bench("B2", "00|00", L);
    bench("G2", "11|11", L);
    bench("A3", "111|111", L);
    bench("A3", "101|000", L);
    return 0;
}
