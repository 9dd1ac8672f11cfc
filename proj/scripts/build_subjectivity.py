"""Convert a pattern-style en-sentiment.xml into the subjectivity CSV.

Senses of the same (word, coarse tag) are averaged.
usage: build_subjectivity.py en-sentiment.xml out.csv
"""
import csv
import sys
import xml.etree.ElementTree as ET
from collections import defaultdict


def coarse(pos):
    if pos.startswith("JJ"):
        return "ADJ"
    if pos.startswith("NN"):
        return "NOUN"
    if pos.startswith("VB"):
        return "VERB"
    return "OTHER"


def main(src, dst):
    groups = defaultdict(list)
    for w in ET.parse(src).getroot().iter("word"):
        form = w.get("form", "").strip().lower()
        if not form or " " in form:
            continue
        groups[(form, coarse(w.get("pos", "")))].append(
            (float(w.get("polarity")), float(w.get("subjectivity")), float(w.get("intensity")))
        )
    with open(dst, "w", newline="") as f:
        out = csv.writer(f, lineterminator="\n")
        out.writerow(["lemma", "tag", "polarity", "subjectivity", "intensity"])
        for (form, tag), senses in sorted(groups.items()):
            n = len(senses)
            out.writerow([form, tag] + ["%.4f" % (sum(s[i] for s in senses) / n) for i in range(3)])


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
