"""Build the sequence lists at each level and look at their structure.

The level-1 list is the classical pattern: after the two opening sequences,
each one is the last letter of the sequence-before-last glued onto all but
the last letter of the previous sequence.  Higher levels thread "skip
letters" through that pattern, periodically dropping them to save length.
"""

from skipseq import build_supersequence, gen_t1, gen_t2, gen_ts

print("Level 1, six letters:")
for k, seq in enumerate(gen_t1(6).sequences, start=1):
    print(f"  sigma_{k:<2} = {seq}")

print("\nLevel 2, twelve letters (letter 12 is skipped twice):")
glist = gen_t2(12)
for k, seq in enumerate(glist.sequences, start=1):
    marker = " <- skip" if glist.tag(k) == "skip" else ""
    print(f"  sigma_{k:<2} {glist.tag(k):>8}: {seq}{marker}")

print("\nLevel 3, eighteen letters; per-case tags drive the cycle:")
glist = gen_ts(3, 18)
for k in range(1, 19):
    print(f"  sigma_{k:<2} [{glist.tag(k):>8}] len={len(glist.seq(k))}")

sseq = build_supersequence(glist)
print(f"\nInterposing 19 copies of the new letter 19 gives a word of "
      f"length {sseq.length} over 19 letters.")
