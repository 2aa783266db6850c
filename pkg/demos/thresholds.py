"""Security thresholds: where the key rate crosses zero.

Bisects both closed-form rates and shows the sign change around each root.
BB84 survives up to ~11% QBER, the six-state protocol up to ~12.6%.
"""

from symqkd.rates import closed_rate_bb84, closed_rate_six_state, find_threshold
from symqkd.states import Protocol

for protocol, rate in (
    (Protocol.BB84, closed_rate_bb84),
    (Protocol.SIX_STATE, closed_rate_six_state),
):
    t = find_threshold(protocol)
    print(f"{protocol.value}: D* = {t.D_star:.6f}  (|rate| = {abs(t.residual):.1e}, {t.iterations} bisections)")
    for offset in (-0.02, -0.01, 0.0, 0.01, 0.02):
        d = t.D_star + offset
        marker = "  <- root" if offset == 0.0 else ""
        print(f"    rate({d:.6f}) = {rate(d):+.6f}{marker}")
    print()

d_bb = find_threshold(Protocol.BB84).D_star
d_six = find_threshold(Protocol.SIX_STATE).D_star
print(f"six-state tolerates {100 * (d_six - d_bb):.2f} percentage points more noise than BB84")
