#pragma once

#include "limits.hpp"
#include "tseries.hpp"

namespace macvv {

// Window slice of the asymptotic tableaux of T: the tableaux with rank at
// most `window`, realized as PSYT(base^(window); T|window). Tail boxes carry
// the remaining indices consecutively and contribute no inversions (certified
// separately by embed_window).
std::vector<Psyt> enumerate_apsyt_bounded(const OmegaFilling& T, long max_inv, int window);

// Zero-extension of a window tableau by one more consecutive tail index.
Psyt embed_window(const Partition& base, const Psyt& tau);
// Certifies that the embedding preserves the inversion set exactly.
bool window_embedding_preserves_inversions(const Partition& base, const Psyt& tau);

// Left side: the closed product over base^(rank), expanded to the order.
TSeries lhs_series(const OmegaFilling& T, long order);

// Right side: the tableau sum, windows grown until two consecutive window
// sums agree through the order.
TSeries rhs_series(const OmegaFilling& T, long order, int window_cap, int* window_used,
                   bool* stabilized);

struct IdentityReport {
    OmegaFilling T;
    long order;
    TSeries lhs, rhs;
    bool verdict = false;   // sides agree through the order
    bool stabilized = false; // window certificate obtained
    int window_used = 0;
};

// window_cap <= 0 selects the default rank + order + 6.
IdentityReport verify_identity(const OmegaFilling& T, long order, int window_cap = 0);

} // namespace macvv
