"""Tour of the run-length calculus on two-letter alphabets.

Every word over {a, b} decomposes into maximal runs.  Reading off the run
lengths (delta), padding short boundary runs (closure) and dropping them
(derivative) gives a little differential calculus in which "smooth" words
are the ones that can be differentiated all the way down to nothing.
"""

from smoothwords import (Alphabet, Word, closure, complement, delta,
                         delta_inv, derivative, mirror, rho, runs,
                         smooth_chain, word_to_text)

ab = Alphabet(1, 3)
w = Word("3311133313133311133")

print("word        ", w)
print("runs        ", " ".join(f"{letter}^{length}" for letter, length in runs(w)))
print("delta       ", delta(w))

# The closure tops up a boundary run longer than a to exactly b letters.
hat = closure(w, ab)
print("closure     ", hat)

# The derivative reads run lengths, dropping a boundary run shorter than b.
print("derivative  ", derivative(hat, ab))
print("rho         ", rho(w, ab), "(same thing: derivative of the closure)")

# Iterating rho yields the derivative chain; ending at the empty word
# is what it means to be smooth.
print("\nderivative chain:")
chain = smooth_chain(w, ab)
for depth, level in enumerate(chain.levels):
    print(f"  rho^{depth}: {word_to_text(level) or '(empty)'}")
print("verdict:", chain.verdict)

# Symmetries: reversal and letter-swap commute with everything in sight.
print("\nmirror      ", mirror(w))
print("complement  ", complement(w, ab))
print("rho of mirror    ", rho(mirror(w), ab), "= mirror of rho:",
      mirror(rho(w, ab)) == rho(mirror(w), ab))
print("rho of complement", rho(complement(w, ab), ab), "= rho:",
      rho(complement(w, ab), ab) == rho(w, ab))

# delta_inv rebuilds a word from prescribed run lengths, letters
# alternating from a chosen starting letter; delta undoes it exactly.
u = Word("1313")
built = delta_inv(u, 1, ab)
print("\ndelta_inv of", u, "starting at 1:", built)
print("delta round trip:", delta(built) == u)

# A word whose run structure breaks the rules is not smooth, and the chain
# says why and where.
bad = smooth_chain(Word("113311"), ab)
print("\n113311 over {1,3}:", bad.verdict, "-", bad.failure.reason,
      "at level", bad.failure.level)
