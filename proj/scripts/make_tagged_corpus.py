"""Generate caption-style sentences tagged with the six coarse POS classes.

Open-class vocabulary comes from a Brill-format lexicon (word TAG per line)
filtered by a word-frequency list; closed-class words and templates are
written here. About 15% of the open-class words are reserved for the
held-out file so that it contains words the tagger never saw.

usage: make_tagged_corpus.py LEXICON FREQS OUT_TRAIN N_TRAIN OUT_HELDOUT N_HELDOUT SEED
"""
import random
import sys
import zlib

CURATED = {
    "N": """painting picture woman man girl boy child lady bird horse dog cat tree
        sky sea ocean river lake mountain hill field flower house building church
        city street road boat ship sun moon cloud storm wave forest garden face
        eyes hair dress hat table chair window door fruit bowl vase color light
        shadow artist scene landscape portrait figure body hand head background
        water snow rain night morning sunset person family crowd village bridge
        castle room wall fire smoke rock stone grass leaf field angel saint king
        queen soldier horse battle death life peace love joy fear anger sadness
        texture shape line brush stroke canvas style piece work detail look""",
    "NS": """colors trees people birds flowers clouds mountains houses buildings
        boats women men children eyes shapes lines lights shadows figures faces
        hands waves leaves rocks animals horses dogs fruits details strokes
        colours streets hills fields angels soldiers""",
    "A": """beautiful happy sad dark bright calm peaceful angry scary lonely warm
        cold soft vibrant dull strange weird old young small large big little
        blue red green yellow white black orange purple pink brown gray grey
        gloomy cheerful serene chaotic busy quiet empty rich simple abstract
        realistic detailed colorful pale deep lovely ugly creepy eerie sunny
        gentle rough smooth wild pretty nice great sweet nervous tired alone
        curious content amazed excited disgusted afraid upset nostalgic tense""",
    "V": """see feel love like think make look paint enjoy remember imagine wonder
        hate want seem show""",
    "VZ": """looks seems makes feels shows reminds gives stands sits holds walks
        appears depicts creates looks wears flows shines""",
    "VG": """looking sitting standing walking holding playing painting flying
        swimming running dancing wearing reading smiling crying waiting resting
        falling shining floating staring working""",
    "VD": """looked seemed made felt painted used chose captured created showed
        gave drew""",
    "R": """very really so quite too just almost extremely slightly pretty also
        still softly gently calmly brightly together here there away""",
}

CLOSED = {
    "DET": ("OTHER", "the a an this that these those some every each all no"),
    "PRON": ("PRON", "i me it he she they we you him her them us"),
    "POSS": ("PRON", "his her their its my our your"),
    "CONJ": ("OTHER", "and or but"),
    "SUB": ("ADP", "because while as if than"),
    "PREP": ("ADP", "in on of with at by near from under behind over into through about for across around"),
    "NUM": ("OTHER", "two three four five one"),
}

CURATED_SETS = {k: set(v.split()) for k, v in CURATED.items()}

UNIVERSAL = {
    "N": "NOUN", "NS": "NOUN", "A": "ADJ", "V": "VERB", "VZ": "VERB",
    "VG": "VERB", "VD": "VERB", "R": "OTHER",
}

# literal tokens are word|TAG; slots are {N} {NS} {A} {V} {VZ} {VG} {VD} {R}
# and closed-class {DET} {PRON} {POSS} {CONJ} {PREP} {NUM}
TEMPLATES = """
{DET} {A} {N} makes|VERB me|PRON feel|VERB {A}
i|PRON feel|VERB {A} because|ADP the|OTHER {N} looks|VERB {A}
the|OTHER {N} {PREP} the|OTHER {N} is|VERB {A} and|OTHER {A}
this|OTHER painting|NOUN makes|VERB me|PRON feel|VERB {A} because|ADP of|ADP the|OTHER {A} {NS}
a|OTHER {N} {PREP} a|OTHER {N}
a|OTHER bird|NOUN in|ADP a|OTHER tree|NOUN
the|OTHER way|NOUN the|OTHER {N} {VZ} {PREP} the|OTHER {N} reminds|VERB me|PRON of|ADP {NS}
it|PRON looks|VERB like|ADP a|OTHER {N} {VG} {PREP} the|OTHER {N}
{PRON} seems|VERB {A} and|OTHER {R} {A}
i|PRON love|VERB how|OTHER the|OTHER artist|NOUN used|VERB {A} {NS}
there|OTHER is|VERB a|OTHER {N} that|OTHER looks|VERB {A}
the|OTHER {NS} are|VERB {VG} together|OTHER which|OTHER makes|VERB me|PRON {A}
he|PRON is|VERB {VG} the|OTHER {N} while|ADP {PRON} {VZ}
i|PRON like|VERB the|OTHER {A} {NS} and|OTHER the|OTHER {N}
the|OTHER {N} 's|OTHER {N} looks|VERB {R} {A}
it|PRON 's|VERB a|OTHER {A} {N} with|ADP {A} {NS}
the|OTHER {NS} look|VERB like|ADP {NS} {PREP} the|OTHER {N}
{POSS} {N} is|VERB {A} and|OTHER {POSS} {N} is|VERB {A}
this|OTHER reminds|VERB me|PRON of|ADP a|OTHER {A} {N} {PREP} the|OTHER {N}
the|OTHER {A} {N} {VZ} {PREP} the|OTHER {A} {N}
i|PRON can|VERB see|VERB {NUM} {NS} {PREP} the|OTHER {N}
the|OTHER artist|NOUN {VD} {A} {NS} to|OTHER show|VERB the|OTHER {N}
{DET} {N} looks|VERB {A} but|OTHER the|OTHER {N} is|VERB {A}
i|PRON do|VERB n't|OTHER {V} the|OTHER {N} because|ADP it|PRON is|VERB too|OTHER {A}
the|OTHER {NS} {PREP} the|OTHER {N} make|VERB the|OTHER {N} feel|VERB {A}
she|PRON is|VERB {VG} {PREP} the|OTHER {N} and|OTHER looks|VERB {A}
the|OTHER {N} is|VERB {R} {A} and|OTHER i|PRON {V} it|PRON
it|PRON makes|VERB me|PRON think|VERB of|ADP {DET} {A} {N}
the|OTHER {A} {NS} {PREP} the|OTHER {N} are|VERB {A}
i|PRON feel|VERB {A} looking|VERB at|ADP the|OTHER {A} {N}
the|OTHER {N} {VD} {A} and|OTHER {A}
they|PRON are|VERB {VG} {PREP} a|OTHER {A} {N}
the|OTHER {N} has|VERB a|OTHER {A} look|NOUN {PREP} {POSS} {N}
you|PRON can|VERB {V} the|OTHER {N} {PREP} the|OTHER {NS}
the|OTHER {NS} {VD} {R} {A} {PREP} the|OTHER {N}
a|OTHER {A} {N} {VG} {PREP} {DET} {A} {N}
the|OTHER light|NOUN {PREP} the|OTHER {N} is|VERB {A}
the|OTHER {N} is|VERB light|ADJ and|OTHER the|OTHER {N} is|VERB dark|ADJ
the|OTHER dark|NOUN makes|VERB the|OTHER {N} look|VERB {A}
i|PRON would|VERB like|VERB to|OTHER {V} {DET} {N} like|ADP this|OTHER
{NUM} {A} {NS} {VG} {PREP} {DET} {N}
{POSS} {A} {N} {VZ} me|PRON
the|OTHER {N} looks|VERB as|ADP if|ADP it|PRON is|VERB {VG}
the|OTHER colors|NOUN are|VERB {A} and|OTHER {A} which|OTHER is|VERB {A}
this|OTHER is|VERB a|OTHER {A} {N} of|ADP a|OTHER {N} {VG} {PREP} {NS}
i|PRON think|VERB the|OTHER {N} is|VERB {A} because|ADP of|ADP the|OTHER {NS}
the|OTHER {N} and|OTHER the|OTHER {N} are|VERB {R} {A}
all|OTHER the|OTHER {NS} seem|VERB {A}
"""


def load_pools(lexicon_path, freq_path, top):
    tags = {}
    for line in open(lexicon_path, encoding="utf-8"):
        parts = line.split()
        if len(parts) == 2 and parts[0].isalpha() and parts[0].islower():
            tags[parts[0]] = parts[1]
    freq = {}
    for line in open(freq_path, encoding="utf-8"):
        if line.startswith(";"):
            continue
        parts = line.split()
        if len(parts) == 2:
            freq[parts[0]] = int(parts[1])
    closed = {w for _, words in CLOSED.values() for w in words.split()}
    penn = {"N": "NN", "NS": "NNS", "A": "JJ", "V": "VB", "VZ": "VBZ",
            "VG": "VBG", "VD": "VBD", "R": "RB"}
    ranked = sorted((w for w in tags if w in freq and len(w) > 2), key=lambda w: (-freq[w], w))[:top]
    pools = {}
    for slot, words in CURATED.items():
        pool = set(words.split())
        pool |= {w for w in ranked if tags[w] == penn[slot]}
        pools[slot] = sorted(pool - closed)
    return pools


def split_pool(words, heldout):
    keep, held = [], []
    for w in words:
        (held if zlib.crc32(w.encode()) % 100 < 15 else keep).append(w)
    return held if heldout else keep


def generate(pools, n, rng, heldout):
    train_pools = {k: split_pool(v, False) for k, v in pools.items()}
    held_pools = {k: split_pool(v, True) for k, v in pools.items()}
    templates = [t.split() for t in TEMPLATES.strip().splitlines()]
    lines = []
    for _ in range(n):
        out = []
        for item in rng.choice(templates):
            if item.startswith("{"):
                slot = item[1:-1]
                if slot in CLOSED:
                    tag, words = CLOSED[slot]
                    out.append((rng.choice(words.split()), tag))
                    continue
                pool = train_pools[slot]
                curated = [w for w in pool if w in CURATED_SETS[slot]]
                if curated and rng.random() < 0.6:
                    pool = curated
                if heldout and held_pools[slot] and rng.random() < 0.3:
                    pool = held_pools[slot]
                out.append((rng.choice(pool), UNIVERSAL[slot]))
            else:
                word, tag = item.split("|")
                out.append((word, tag))
        lines.append(" ".join(f"{w}_{t}" for w, t in out))
    return lines


def main(lexicon, freqs, out_train, n_train, out_held, n_held, seed):
    pools = load_pools(lexicon, freqs, 6000)
    rng = random.Random(int(seed))
    with open(out_train, "w") as f:
        f.write("\n".join(generate(pools, int(n_train), rng, False)) + "\n")
    with open(out_held, "w") as f:
        f.write("\n".join(generate(pools, int(n_held), rng, True)) + "\n")


if __name__ == "__main__":
    main(*sys.argv[1:8])
