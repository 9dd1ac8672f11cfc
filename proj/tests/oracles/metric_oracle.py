"""Independent reference values for the caption metrics on fixture pairs.

Each input line is `hypothesis<TAB>ref1|ref2|...`, already lowercase and
space-tokenized. Output rows are `pair<TAB>metric<TAB>value`; pair "all"
holds corpus-level BLEU over every line.

LCS uses the recursive definition; METEOR searches every alignment of each
stage exhaustively (most matches, then fewest chunks) instead of following
the greedy rule of the implementation under test.

usage: metric_oracle.py PAIRS.tsv OUT.tsv
"""
import math
import sys
from collections import Counter
from functools import lru_cache

from nltk.stem.porter import PorterStemmer

STEM = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS).stem


def lcs(a, b):
    @lru_cache(maxsize=None)
    def go(i, j):
        if i == len(a) or j == len(b):
            return 0
        if a[i] == b[j]:
            return 1 + go(i + 1, j + 1)
        return max(go(i + 1, j), go(i, j + 1))
    return go(0, 0)


def rouge_l(h, r, beta=1.2):
    l = lcs(tuple(h), tuple(r))
    if l == 0:
        return 0.0
    p, rc = l / len(h), l / len(r)
    return (1 + beta ** 2) * p * rc / (rc + beta ** 2 * p)


def ngrams(tokens, n):
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def bleu(segments, n):
    clipped = [0] * n
    total = [0] * n
    c = r = 0
    for h, refs in segments:
        c += len(h)
        r += min((abs(len(x) - len(h)), len(x)) for x in refs)[1]
        for k in range(1, n + 1):
            hc = ngrams(h, k)
            cap = Counter()
            for x in refs:
                cap |= ngrams(x, k)
            clipped[k - 1] += sum(min(v, cap[g]) for g, v in hc.items())
            total[k - 1] += sum(hc.values())
    if any(v == 0 for v in clipped):
        return 0.0
    bp = 1.0 if c >= r else math.exp(1 - r / c)
    return bp * math.exp(sum(math.log(clipped[k] / total[k]) for k in range(n)) / n)


def chunks(mapping):
    out, prev = 0, None
    for m in mapping:
        if m is not None and not (prev is not None and m == prev + 1):
            out += 1
        prev = m
    return out


def best_stage(h, r, mapping, key):
    """All completions of `mapping` for one stage; keep max matches, min chunks."""
    free = [i for i, m in enumerate(mapping) if m is None]
    used = {m for m in mapping if m is not None}
    best = None

    def rec(k, cur, used):
        nonlocal best
        if k == len(free):
            score = (sum(m is not None for m in cur), -chunks(cur))
            if best is None or score > best[0]:
                best = (score, list(cur))
            return
        i = free[k]
        rec(k + 1, cur, used)
        for j in range(len(r)):
            if j not in used and key(r[j]) == key(h[i]):
                cur[i] = j
                used.add(j)
                rec(k + 1, cur, used)
                used.discard(j)
                cur[i] = None

    rec(0, list(mapping), set(used))
    return best[1]


def meteor(h, r, alpha=0.9, beta=3.0, gamma=0.5):
    mapping = best_stage(h, r, [None] * len(h), lambda w: w)
    mapping = best_stage(h, r, mapping, STEM)
    m = sum(x is not None for x in mapping)
    if m == 0:
        return 0.0
    p, rc = m / len(h), m / len(r)
    fmean = p * rc / (alpha * p + (1 - alpha) * rc)
    return fmean * (1 - gamma * (chunks(mapping) / m) ** beta)


def main(src, dst):
    segments = []
    for line in open(src):
        if line.strip():
            hyp, refs = line.rstrip("\n").split("\t")
            segments.append((hyp.split(), [x.split() for x in refs.split("|")]))
    with open(dst, "w") as out:
        for i, (h, refs) in enumerate(segments):
            out.write(f"{i}\tlcs\t{lcs(tuple(h), tuple(refs[0]))}\n")
            out.write(f"{i}\trouge_l\t{max(rouge_l(h, x) for x in refs):.15g}\n")
            out.write(f"{i}\tmeteor\t{max(meteor(h, x) for x in refs):.15g}\n")
            for n in range(1, 5):
                out.write(f"{i}\tbleu{n}\t{bleu([(h, refs)], n):.15g}\n")
        for n in range(1, 5):
            out.write(f"all\tbleu{n}\t{bleu(segments, n):.15g}\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
