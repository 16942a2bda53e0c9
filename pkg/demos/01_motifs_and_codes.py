"""Motifs, varieties and maximal motifs of a small code.

A motif is a word with wildcards.  Its variety is every word it matches, and
a motif belongs to a code when its whole variety does.  The maximal ones are
enough to rebuild the code, and those of the complement can be found from
them by a hitting-set search without listing the complement.
"""

from polarcodes import Code, complement, max_mot, max_mot_complement, sorted_motifs, variety

C = Code.from_words(["000", "001", "011", "111"])
print("code:", sorted(C.words))

mm = sorted_motifs(max_mot(C))
print("maximal motifs:", [str(a) for a in mm])
for a in mm:
    print(f"  V({a}) = {sorted(variety(a).words)}")

# two of the three already cover C, but all three are maximal
print("00* and *11 cover C:", variety("00*").words | variety("*11").words == C.words)

D = complement(C)
print("complement:", sorted(D.words))
print("its maximal motifs, by enumeration:   ", [str(a) for a in sorted_motifs(max_mot(D))])
print("its maximal motifs, from MaxMot(C) only:",
      [str(a) for a in sorted_motifs(max_mot_complement(max_mot(C), C.n))])
