"""
Fitting and refusing to fit rational series
===========================================

A product of two stage fractions looks rational until the second stage
enters.  The certificate records the rank jump of the recurrence system.
"""

from bingsling import rationality as ra

sched = ra.Schedule("growth2", (2, 10))
print(ra.schedule_validate(sched))
stages = sched.stages()

bound = ra.RationalFitBound(3, 2)
for order in (10, 11):
    s = ra.accumulate_sum(stages, order)
    cert = ra.certify_no_fit(s, bound)
    print(order, cert.verdict, cert.rank, cert.rank_augmented, cert.fit)

# the second stage starts at this power of z
print(ra.stage_divisibility("growth2", 2, 10))

# infinite products of non-trivial factors can still be rational
s, fit = ra.counterexample_product(16)
print(s, "=", fit)
s, fit = ra.counterexample_mobius_sum(12)
print(s, "=", fit)
