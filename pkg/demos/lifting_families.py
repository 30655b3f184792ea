"""Manufacturing endless supplies of smooth powers by lifting.

On an alphabet whose two letters share parity, an even-length base can be
pulled back through delta_inv without breaking power structure: the lift of
u^n is the n-th power of the lift of u.  Each pull-back strictly grows the
base, so one smooth power seeds an unbounded family of distinct ones.
"""

from smoothwords import (Alphabet, Word, is_smooth, lift, lift_family,
                         word_to_text)

print("cube family over {2,4}, seeded by 2244:")
for base in lift_family(Word("2244"), 3, 2, 4, Alphabet(2, 4)):
    print(f"  |u| = {len(base):3}  u = {word_to_text(base)}")

print("\nbiquadrate family over {1,3}, seeded by 3111313111:")
for base in lift_family(Word("3111313111"), 4, 1, 4, Alphabet(1, 3)):
    cube_len = len(base) * 4
    print(f"  |u| = {len(base):3}  (power has {cube_len} letters)  u = {word_to_text(base)}")

print("\nquartic family over {1,5}, seeded by 155555:")
for base in lift_family(Word("155555"), 4, 1, 3, Alphabet(1, 5)):
    print(f"  |u| = {len(base):3}  u = {word_to_text(base)[:60]}"
          + ("..." if len(base) > 60 else ""))

# the lift-power exchange that makes this work, on a tiny example
ab = Alphabet(2, 4)
u = Word("22")
print("\nlift/power exchange on", u, "over {2,4}:")
print("  lift(u)^3          ", word_to_text(lift(u, 2, 1, ab) * 3))
print("  lift(u^3)          ", word_to_text(lift(u * 3, 2, 1, ab)))
print("  equal:", lift(u, 2, 1, ab) * 3 == lift(u * 3, 2, 1, ab))
print("  power of the lift smooth:", is_smooth(lift(u, 2, 1, ab) * 3, ab))
