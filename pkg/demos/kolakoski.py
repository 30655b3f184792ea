"""The run-length self-generating word and its relatives.

Over {1,2} starting with 1 this is the classical sequence that equals its
own run-length reading.  The same feedback construction works over any
two-letter alphabet and either starting letter.
"""

from smoothwords import Alphabet, delta, is_smooth, kolakoski_prefix, word_to_text

ab = Alphabet(1, 2)
k = kolakoski_prefix(ab, 1, 60)
print("prefix      ", word_to_text(k))
print("run lengths ", word_to_text(delta(k)))

# The run-length reading reproduces the word itself (the cut can truncate
# the very last run, so compare up to the final letter).
d = delta(kolakoski_prefix(ab, 1, 10000))
p = kolakoski_prefix(ab, 1, len(d))
print("self-reproduction over 10k letters:", d[:-1] == p[:len(d) - 1])

# Every prefix is smooth: one test at the longest length covers them all,
# since factors of smooth words are smooth.
print("prefix of length 2000 is smooth:", is_smooth(kolakoski_prefix(ab, 1, 2000), ab))

# Other alphabets and starting letters generate just as well.
for a, b, first in [(1, 2, 2), (1, 3, 1), (2, 3, 2), (2, 4, 4)]:
    alphabet = Alphabet(a, b)
    w = kolakoski_prefix(alphabet, first, 40)
    ok = delta(w)[:-1] == w[:len(delta(w)) - 1]
    print(f"{{{a},{b}}} from {first}: {word_to_text(w)}  self-consistent={ok}")
