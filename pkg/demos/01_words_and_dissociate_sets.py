"""Words over a lacunary letter set, and a set that fails to be dissociate."""

from rieszsep import enumerate_words, is_dissociate, make_letters, word_intersection_check
from rieszsep.dualgroup import IntegerGroup

Z = IntegerGroup()
lac = make_letters(Z, [Z.element(3 ** k) for k in range(1, 8)])

# every signed sum of distinct powers of 3 is distinct: 3**7 words in total
report = is_dissociate(Z, lac, 7)
print("powers of 3 dissociate:", report.verified, "words checked:", report.n_words)

# 1 + 2 = 3 breaks uniqueness
bad = is_dissociate(Z, make_letters(Z, [Z.element(v) for v in (1, 2, 3)]), 2)
print("counterexample words:", bad.counterexample.first, bad.counterexample.second)

# the word set of {3, 9} up to length 2, in enumeration order
ws = enumerate_words(Z, lac[:2], 2)
print("Omega_2({3, 9}) =", [Z.value(x) for x in ws])

# words common to two letter sets are exactly the words of their common letters
res = word_intersection_check(Z, lac[:2], lac[1:3], 2)
print("common words of {3,9} and {9,27}:", sorted(Z.value(x) for x in res.common), "equal:", res.equal)
