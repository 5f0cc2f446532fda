#pragma once

// Naive list-based reference generator. Deliberately shares no code with
// Generator: u is one growing vector, directors are popped by index modulo
// their period, nothing is windowed or bit-packed. Used as a test oracle.

#include <cstdint>
#include <utility>

#include "selfdesc/director.hpp"

namespace selfdesc {

struct OracleOutput {
    Word u;
    Word delta;
};

/// Produces at least `letters` letters of u (truncated to exactly that many)
/// and every delta letter for runs whose read position was expanded on the
/// way, plus more if `min_runs` asks for them.
inline OracleOutput oracle_generate(const DirectorWord& x1, const DirectorWord& x2, std::uint64_t letters,
                                    std::uint64_t min_runs = 0) {
    OracleOutput out;
    out.u = {2, 2};
    out.delta = {2};
    std::uint64_t popped1 = 0, popped2 = 0;
    std::uint64_t k = 1;
    while (out.u.size() < letters || out.delta.size() < min_runs) {
        Letter c;
        if (out.u[k] == 1) {
            c = x1[popped1++ % x1.period()];
            out.u.push_back(c);
        } else {
            c = x2[popped2++ % x2.period()];
            out.u.push_back(c);
            out.u.push_back(c);
        }
        out.delta.push_back(c);
        ++k;
    }
    if (out.u.size() > letters) out.u.resize(letters);
    if (out.delta.size() > min_runs && min_runs > 0) out.delta.resize(min_runs);
    return out;
}

}  // namespace selfdesc
