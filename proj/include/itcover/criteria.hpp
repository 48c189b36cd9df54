#ifndef ITCOVER_CRITERIA_HPP
#define ITCOVER_CRITERIA_HPP

#include <optional>

#include "itcover/graph.hpp"

namespace itcover {

struct DominationWitness;  // solver.hpp

// Record of the reductions applied when bringing parameters into the
// normalized regime. Replaying it backwards turns a construction for the
// normalized parameters into one for the originals (swap side labels,
// delete ka_raised delta vertices per A-class; degree clamps need no undo).
struct NormalizationTrace {
    bool swapped = false;
    std::optional<int> da_clamped_from;
    std::optional<int> db_clamped_from;
    std::optional<int> ka_raised_from;

    bool identity() const {
        return !swapped && !da_clamped_from && !db_clamped_from && !ka_raised_from;
    }
    bool operator==(const NormalizationTrace&) const = default;
};

void require_positive(const Params& p);

// True iff DB/kA + DA/kB <= 1, decided as db*kb + da*ka <= ka*kb in
// integers. False is exactly condition (*).
bool sufficient(const Params& p);

// t = ka*da + kb*db - ka*kb >= 1. Throws if (*) does not hold.
int surplus(const Params& p);

// Brings p into the regime da <= kb <= 2*da - 1 and ka >= 2*db while
// keeping (*), recording every change.
std::pair<Params, NormalizationTrace> normalize(const Params& p);

// Counting inequalities from the sufficiency proof, evaluated with the
// minimum actual class sizes over the witness classes and the maximum
// actual degrees in g: a*ka <= (a+b-1)*db and b*kb <= (a+b-1)*da.
bool witness_counting_check(const CoverGraph& g, const DominationWitness& w,
                            const Params& p);

}  // namespace itcover

#endif
