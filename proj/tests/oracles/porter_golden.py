"""Reference Porter stems (Martin Porter's C-release variant) from NLTK.

usage: porter_golden.py WORDLIST OUT.tsv
"""
import sys

from nltk.stem.porter import PorterStemmer


def main(src, dst):
    stemmer = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)
    words = sorted({w.strip() for w in open(src) if w.strip().isalpha() and w.strip().islower()})
    with open(dst, "w") as out:
        for w in words:
            out.write(f"{w}\t{stemmer.stem(w)}\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
