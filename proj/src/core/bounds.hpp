#pragma once

#include <map>
#include <vector>

#include "channel.hpp"
#include "geometry.hpp"
#include "prob.hpp"

namespace acmac {

// Number of base-`radix` digit strings of the given length, guarded.
std::int64_t pow_checked(int radix, int exponent, std::int64_t cap);

// Parameters of the single-window achievable region: an i.i.d. law for the
// uninformed user plus one X2 row per cognition window v in X1^D. Windows are
// enumerated row-major with index 1 = oldest symbol.
struct InnerParams {
    Pmf p_x1;
    ConditionalPmf p_x2_given_v;  // |X1|^D rows, |X2| columns

    static InnerParams uniform(const DiscreteChannel& ch, const DelaySet& ds);
};

// Parameters of the blocked outer region. p_vtilde lives on the effective
// X1^(2D-1) support of the D overlapping windows; the causal chain gives one
// conditional per block position i, with row index
// vtilde_index * |X2|^(i-1) + prefix_index (prefix row-major, oldest first).
struct OuterParams {
    Pmf p_vtilde;
    std::vector<ConditionalPmf> p_x2_causal;  // size D

    static OuterParams uniform(const DiscreteChannel& ch, const DelaySet& ds);
};

struct DelayCaps {
    int d = 0;
    double sum_cap = 0.0;
    double r2_cap = 0.0;
    double r1_cap = kNoR1Cap;
};

struct BoundResult {
    std::vector<DelayCaps> per_delay;
    BoundPentagon pentagon;  // componentwise min over delays
};

void validate_inner_params(const DiscreteChannel& ch, const DelaySet& ds, const InnerParams& p);
void validate_outer_params(const DiscreteChannel& ch, const DelaySet& ds, const OuterParams& p);

// Joint law P(v, x1, x2, y) of the single-window construction for one delay:
// i.i.d. window law, x1 pinned to window slot d_max - d + 1, channel applied.
// Axes: "vbar", "x1", "x2", "y".
JointTensor joint_law_inner(const DiscreteChannel& ch, const DelaySet& ds, int d,
                            const InnerParams& params);

// Blocked joint law P(vtilde, x1bar, x2bar, ybar) for one delay; x1bar is a
// deterministic coordinate selection from vtilde and ybar is memoryless given
// the blocks. Axes: "vtilde", "x1bar", "x2bar", "ybar".
JointTensor joint_law_outer(const DiscreteChannel& ch, const DelaySet& ds, int d,
                            const OuterParams& params);

// Achievable pentagon: per delay, sum <= I_d(X1;Y) + I_d(X2;Y|V) and
// R2 <= I_d(X2;Y|V); no R1 cap.
BoundResult inner_point(const DiscreteChannel& ch, const DelaySet& ds, const InnerParams& params);

// Outer pentagon: per delay, sum <= (1/D) I_d(X1bar,X2bar;Ybar) and
// R2 <= (1/D) I_d(X2bar;Ybar|Vtilde); no R1 cap.
BoundResult outer_point(const DiscreteChannel& ch, const DelaySet& ds, const OuterParams& params);

// Codeword-cognition variants: same pentagons with the uninformed-rate cap
// R1 <= H(X1), resp. R1 <= (1/D) min_d H_d(X1bar).
BoundResult accmac_inner_point(const DiscreteChannel& ch, const DelaySet& ds,
                               const InnerParams& params);
BoundResult accmac_outer_point(const DiscreteChannel& ch, const DelaySet& ds,
                               const OuterParams& params);

// Blocked product extension of single-window parameters: the i.i.d. window
// law with the X2 rows applied per block position. Evaluating outer_point on
// the extension dominates inner_point on the original coordinatewise, which
// is what makes seeding the outer search from the inner trace a containment
// guarantee.
OuterParams extend_inner_params(const DiscreteChannel& ch, const DelaySet& ds,
                                const InnerParams& params);

// Index helpers for windows over X1 strings (row-major, oldest first).
int vtilde_window(int vtilde_index, int window_pos, int x1_size, int D);
int window_slot_symbol(int window_index, int slot, int x1_size, int D);

}  // namespace acmac
