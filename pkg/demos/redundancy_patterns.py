"""How structure turns component availability into system availability.

Series multiplies availabilities (every element must work), parallel
multiplies unavailabilities (every element must fail), and k-of-n sits
between the two extremes — k=1 is parallel, k=n is series.
"""

from availkit import eval_kofn, eval_parallel, eval_series, unavailability

a = 0.9

print(f"one component            {a}")
print(f"two in series            {float(eval_series([a, a]))}")
print(f"two in parallel          {float(eval_parallel([a, a]))}")
print(f"2-of-3 voting            {float(eval_kofn(2, [a, a, a]))}")

# Redundancy pays off in unavailability, which is why it is usually
# quoted that way: each extra parallel unit multiplies the downtime
# fraction by 0.1 here.
print("\nn parallel   unavailability")
for n in range(1, 6):
    u = float(unavailability(eval_parallel([a] * n)))
    print(f"{n:<12} {u:.1e}")

# Voting systems trade the extremes against each other: more required
# votes means more truth but less tolerance.
print("\nk (of 5)     availability")
for k in range(1, 6):
    print(f"{k:<12} {float(eval_kofn(k, [a] * 5)):.6f}")

# Mixed fleets work too — the poisson-binomial recurrence does not
# need identical units.
mixed = [0.99, 0.97, 0.95, 0.90, 0.85]
print(f"\n3-of-5 over a mixed fleet {mixed}")
print(f"  -> {float(eval_kofn(3, mixed)):.6f}")
