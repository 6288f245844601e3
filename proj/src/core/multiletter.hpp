#pragma once

#include <vector>

#include "bounds.hpp"
#include "channel.hpp"

namespace acmac {

// An n-letter input law P(x1^n, x2^n), either as a dense joint over the two
// codeword alphabets or as a structured i.i.d. expansion of single-window
// parameters (windows taken cyclically, as in the coding scheme).
struct NLetterLaw {
    enum class Kind { joint, iid_inner, iid_uniform };

    int n = 1;
    Kind kind = Kind::iid_uniform;
    std::vector<double> joint;  // |X1|^n * |X2|^n, x1-block major; Kind::joint only
    InnerParams iid;            // Kind::iid_inner only

    static NLetterLaw iid_uniform(int n);
    static NLetterLaw from_iid_inner(int n, InnerParams params);
    static NLetterLaw from_joint(int n, std::vector<double> values);
};

// Full-block region point: per delay, (1/n) I_d(X1^n,X2^n;Y^n) and
// (1/n) I_d(X2^n;Y^n|X1^n), intersected over the delay set. Out-of-range
// delayed symbols are pinned to index 0.
BoundPentagon r_n_point(const DiscreteChannel& ch, const DelaySet& ds, const NLetterLaw& law);

// Same functionals on the truncated output block Y_{d_max+1}^{n-d_min};
// every delayed index is then in range. Requires n >= D.
BoundPentagon q_n_point(const DiscreteChannel& ch, const DelaySet& ds, const NLetterLaw& law);

// q_n_point plus the codeword-cognition cap R1 <= (1/n) H(X1^n).
BoundPentagon accmac_multiletter_point(const DiscreteChannel& ch, const DelaySet& ds,
                                       const NLetterLaw& law);

}  // namespace acmac
