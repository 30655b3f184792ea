"""Census of smooth powers: which u^n stay smooth, and how many.

The scan walks every smooth base up to a length bound (valid because a
base of a smooth power is itself smooth) and tests the power.  Highlights:
the classical cube-freeness over {1,2}, the count of 46 smooth squares,
and a pair of 10-letter bases over {2,3} whose cubes are smooth even
though the threshold table says multi-letter bases should have none.
"""

import time

from smoothwords import Alphabet, gamma, h_delta, scan_powers, word_to_text

print("power-freeness thresholds (h) and exact power-free indices (delta):")
for a, b in [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)]:
    pair = h_delta(Alphabet(a, b))
    print(f"  {{{a},{b}}}: h={pair.h}  delta={pair.delta}")

print("\ncube scan over {1,2}, bases up to 30 letters:")
t0 = time.time()
report = scan_powers(Alphabet(1, 2), 3, 30)
print(f"  {len(report.witnesses)} smooth cubes ({time.time() - t0:.2f}s)")

print("\nsquare census over {1,2}, bases up to 60 letters:")
t0 = time.time()
count, report = gamma(Alphabet(1, 2), 2, 60)
print(f"  gamma = {count} distinct smooth squares ({time.time() - t0:.2f}s)")
print(f"  last new square at base length {report.last_new_base_length}; "
      f"stable = {report.stable}")
longest = max(report.witnesses, key=lambda w: len(w.power))
print(f"  longest square: base {word_to_text(longest.base)} "
      f"({len(longest.power)} letters squared)")

print("\nquintic scan over {1,3} (none expected) and the biquadrates:")
print(f"  quintics: {scan_powers(Alphabet(1, 3), 5, 12).gamma}")
report = scan_powers(Alphabet(1, 3), 4, 12)
for w in report.witnesses:
    print(f"  biquadrate base {word_to_text(w.base)}")

print("\nexhaustive finding over {2,3}: smooth cubes with 10-letter bases")
report = scan_powers(Alphabet(2, 3), 3, 10)
for w in report.witnesses:
    tag = "single letter" if len(w.base) == 1 else "MULTI-RUN"
    print(f"  base {word_to_text(w.base):12} -> power of {len(w.power)} letters  ({tag})")
print("  the multi-run bases refute 3-power-freeness of longer smooth")
print("  words over {2,3}: the claimed threshold h(2,3)=3 does not hold.")

print("\ngamma spot values at stabilizing bounds:")
for (a, b), n in [((2, 4), 4), ((2, 4), 5), ((1, 4), 4), ((1, 5), 5)]:
    count, rep = gamma(Alphabet(a, b), n, 10)
    powers = " ".join(word_to_text(p) for p in rep.distinct_powers) or "-"
    print(f"  gamma_{{{a},{b}}}({n}) = {count}   powers: {powers}")
