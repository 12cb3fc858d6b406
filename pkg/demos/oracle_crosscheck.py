"""Checking the closed forms against brute force.

The oracle shares no probability algebra with the evaluators: it only
knows the boolean structure function. Exhaustive enumeration is exact
up to 2**20 states; beyond that, reproducible Monte Carlo takes over.
"""

from availkit import (
    Bridge,
    KofN,
    Leaf,
    Parallel,
    enumerate_availability,
    eval_block,
    monte_carlo_availability,
)

env = {f"c{i}": 0.9 for i in range(1, 6)}
bridge = Bridge(Leaf("c1"), Leaf("c2"), Leaf("c3"), Leaf("c4"), Leaf("c5"))

closed = float(eval_block(bridge, env))
brute = float(enumerate_availability(bridge, env))
print(f"bridge closed form   {closed}")
print(f"bridge enumeration   {brute}")
print(f"difference           {abs(closed - brute):.2e}")

# Monte Carlo is a pure function of (structure, env, samples, seed) —
# the generator is splitmix64 with published constants, so the same
# call gives the same bits anywhere.
est, hw = monte_carlo_availability(bridge, env, 1_000_000, seed=7)
print(f"\nMC estimate          {float(est)} +/- {hw:.2e} (95%)")
est2, _ = monte_carlo_availability(bridge, env, 1_000_000, seed=7)
print(f"repeat run           {float(est2)} (bit-identical: {float(est) == float(est2)})")

# Convergence toward the exact answer as the budget grows.
print("\nsamples      estimate    |error|")
for n in (1_000, 10_000, 100_000, 1_000_000):
    est, hw = monte_carlo_availability(bridge, env, n, seed=7)
    print(f"{n:<12} {float(est):<11.6f} {abs(float(est) - closed):.2e}")

# A structure big enough that enumeration refuses: 24 instances.
wide = Parallel(tuple(KofN(2, (Leaf("a"), Leaf("b"), Leaf("c"))) for _ in range(8)))
wide_env = {"a": 0.5, "b": 0.5, "c": 0.5}
try:
    enumerate_availability(wide, wide_env)
except Exception as exc:
    print(f"\nenumeration refused: {exc}")
est, hw = monte_carlo_availability(wide, wide_env, 500_000, seed=11)
closed = float(eval_block(wide, wide_env))
print(f"MC instead: {float(est)} vs closed {closed}")
print(f"  within the 95% interval: {abs(float(est) - closed) <= hw}")
