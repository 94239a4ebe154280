"""
Primes: a stack of filters versus one self-consulting filter
============================================================

The classic lazy sieve stacks a new filter on every prime.  The circular
version tests each candidate against the primes already in its own output,
stopping at the square root.
"""

import time

from circprog import Arena, stats
from circprog.lazy_list import take
from circprog.selfref import isprime_shared, primes_circular, sieve_baseline

for name, make in (("sieve", sieve_baseline), ("circular", primes_circular)):
    a = Arena()
    t0 = time.perf_counter()
    ps = take(make(a), 500)
    ms = (time.perf_counter() - t0) * 1000
    print(f"{name:9s} last={ps[-1]}  cells={stats(a).cells_allocated:7d}  {ms:7.1f} ms")

a = Arena()
isprime, primes = isprime_shared(a)
for n in (10007, 10009, 10011):
    before = stats(a).executions
    print(f"isprime({n}) = {isprime(n)}  new executions: {stats(a).executions - before}")
print("primes known so far:", take(primes, 30))
