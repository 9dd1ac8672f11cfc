"""Write the 200-caption test corpus (40 artworks x 5 annotations).

usage: make_fixture_corpus.py OUT.csv [SEED]
"""
import csv
import random
import sys

EMOTIONS = ["amusement", "awe", "contentment", "excitement", "anger",
            "disgust", "fear", "sadness", "something else"]

STYLES = ["Impressionism", "Baroque", "Expressionism", "Romanticism"]
GENRES = ["landscape", "portrait", "still_life", "religious_painting", ""]
PAINTERS = ["claude-monet", "rembrandt", "edvard-munch", "caspar-david-friedrich",
            "berthe-morisot", "peter-paul-rubens", "egon-schiele", "j-m-w-turner"]

SUBJECTS = ["woman", "man", "child", "bird", "horse", "tree", "boat", "house",
            "mountain", "river", "dog", "flower", "sky", "church", "old man"]

CAPTIONS = {
    "amusement": [
        "the {s} looks so funny with that silly hat",
        "i laugh at the way the {s} is posing",
        "this is hilarious, the {s} looks like a clown",
        "the {s} has a goofy smile that makes me giggle",
        "what a playful scene, the {s} seems to be joking",
    ],
    "awe": [
        "the {s} is majestic and the light is stunning",
        "i am amazed by the huge {s} under the glowing sky",
        "the detail on the {s} is incredible and breathtaking",
        "this reminds me of how vast and powerful nature is",
        "the golden light around the {s} is magnificent",
    ],
    "contentment": [
        "the {s} looks calm and peaceful in the soft light",
        "i feel relaxed looking at the quiet {s} by the water",
        "a gentle scene with a {s} resting, very serene",
        "the warm colors make me feel cozy and at ease",
        "the {s} seems happy and content in the garden",
    ],
    "excitement": [
        "the bright colors and the running {s} make me feel energized",
        "wow, the {s} is racing across the field!",
        "the lively brush strokes make this {s} look thrilling",
        "i want to jump into this vibrant scene with the {s}",
        "so much movement, the {s} looks ready for an adventure",
    ],
    "anger": [
        "the {s} looks furious and ready to fight",
        "it makes me mad that the {s} is being treated so cruelly",
        "the harsh red colors feel aggressive and hostile",
        "i hate how the {s} is shown, it is unfair",
        "the {s} is screaming in rage at the crowd",
    ],
    "disgust": [
        "the {s} looks rotten and dirty, it is gross",
        "this is ugly and the colors are revolting",
        "the decaying {s} makes me feel sick",
        "the slimy texture of the {s} is nasty",
        "i find the {s} repulsive and filthy",
    ],
    "fear": [
        "the dark shadows around the {s} are terrifying",
        "the {s} looks like a ghost in the night, very creepy",
        "i feel scared because the {s} seems to be watching me",
        "the storm over the {s} is frightening and dangerous",
        "something evil is hiding behind the {s}",
    ],
    "sadness": [
        "the {s} looks lonely and tired, it makes me sad",
        "the gray colors make the {s} feel gloomy and depressed",
        "the {s} seems to be mourning someone who died",
        "i feel sorrow for the poor {s} left alone",
        "the empty {s} reminds me of losing a loved one",
    ],
    "something else": [
        "the {s} is in the center of the painting",
        "i am not sure what the {s} is doing here",
        "there are many lines and shapes around the {s}",
        "the {s} is blue and the background is brown",
        "it is a {s} next to a wall",
    ],
}

# emotion multiset patterns for five annotations; letters are distinct emotions
PATTERNS = ["AAAAA", "AAAAB", "AAABC", "AABBC", "AABCD", "ABCDE", "AAABB", "AABBB"]


def main(out, seed=11):
    rng = random.Random(seed)
    rows = []
    annotator = 0
    for art in range(40):
        style = STYLES[art % len(STYLES)]
        genre = GENRES[art % len(GENRES)]
        painter = PAINTERS[art % len(PAINTERS)]
        painting = f"{painter}_work-{art:02d}"
        subject = rng.choice(SUBJECTS)
        pattern = PATTERNS[art % len(PATTERNS)]
        pool = rng.sample(EMOTIONS, 5)
        letters = {}
        emotions = []
        for ch in pattern:
            if ch not in letters:
                letters[ch] = pool[len(letters)]
            emotions.append(letters[ch])
        rng.shuffle(emotions)
        for emo in emotions:
            text = rng.choice(CAPTIONS[emo]).format(s=subject)
            if rng.random() < 0.15:
                text = text[0].upper() + text[1:] + "."
            annotator += 1
            rows.append([style, painting, emo, text, genre, painter, f"a{annotator % 37:03d}"])
    with open(out, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["art_style", "painting", "emotion", "utterance", "genre", "painter",
                    "annotator_id"])
        w.writerows(rows)


if __name__ == "__main__":
    main(sys.argv[1], int(sys.argv[2]) if len(sys.argv) > 2 else 11)
