// Benchmark of the OpenMP batch kernels against their serial reference:
// slice-kernel scans, one large fraction-free nullspace, and the relation
// subduction batch.
#include <CLI11.hpp>

#include "invar/imagekernel.hpp"
#include "invar/sagbi.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>

using namespace invar;

namespace {

double seconds(std::function<void()> fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed
              << std::setprecision(3) << std::setw(10) << serial << "s" << std::setw(10)
              << parallel << "s" << std::setw(9) << std::setprecision(2)
              << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP timings for the batch kernels"};
    int max_deg = 18, upto = 4;
    app.add_option("--max-deg", max_deg, "torus degree bound of the slice scan");
    app.add_option("--upto", upto, "index bound of the relation batch");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::cout << "OpenMP enabled\n";
#else
    std::cout << "OpenMP disabled at build time; both columns run serial\n";
#endif
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(11)
              << "serial" << std::setw(11) << "parallel" << std::setw(10) << "speedup\n";

    const Derivation& d = Derivation::D();

    {
        auto scan = [&](Exec mode) {
            size_t total = 0;
            std::vector<std::pair<long, long>> slots;
            for (long a = 0; a <= max_deg; ++a)
                for (long k = 0; k <= a; ++k) slots.push_back({a, k});
            std::vector<size_t> dims(slots.size());
            par_for(slots.size(), mode, [&](size_t i) {
                dims[i] = kernel_slice(slots[i].first, slots[i].second, d, Exec::serial).size();
            });
            for (size_t v : dims) total += v;
            return total;
        };
        size_t ts = 0, tp = 0;
        double s = seconds([&] { ts = scan(Exec::serial); });
        double p = seconds([&] { tp = scan(Exec::parallel); });
        if (ts != tp) {
            std::cerr << "mode mismatch in the slice scan\n";
            return 1;
        }
        row("slice-kernel scan deg<=" + std::to_string(max_deg), s, p);
    }

    {
        // the largest exclusion slice: row updates inside one elimination
        SliceMap sm = slice_map(47, 24, d);
        double s = seconds([&] { (void)nullspace(sm.matrix, Exec::serial); });
        double p = seconds([&] { (void)nullspace(sm.matrix, Exec::parallel); });
        row("fraction-free nullspace 340 cols", s, p);
    }

    {
        FamilyArchive ar = FamilyArchive::seed();
        ar.extend_all(upto);
        double s = seconds([&] { (void)verify_sagbi(ar, upto, Exec::serial); });
        double p = seconds([&] { (void)verify_sagbi(ar, upto, Exec::parallel); });
        row("relation batch N=" + std::to_string(upto), s, p);
    }
    return 0;
}
