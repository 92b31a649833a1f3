#!/usr/bin/env python3
# Copyright 2026 The Kpaug Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/toy_corpus.jsonl, data/toy_lexicon.tsv and
data/toy_predictions.jsonl.

The corpus is synthetic: twenty raw article records whose titles, abstracts
and bodies are assembled from per-topic phrase banks. Some bodies are longer
than 800 words so the truncation path is exercised, and the raw text carries
URLs, e-mail addresses, HTML and numbers for the cleaning rules.
"""

import json
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")

TOPICS = [
    ("neural machine translation", ["attention mechanism", "beam search",
                                    "subword segmentation", "low-resource languages"]),
    ("graph neural networks", ["message passing", "node classification",
                               "graph convolution", "link prediction"]),
    ("information retrieval", ["query expansion", "inverted index",
                               "relevance feedback", "ranking functions"]),
    ("reinforcement learning", ["policy gradient", "reward shaping",
                                "exploration strategies", "value functions"]),
    ("image segmentation", ["convolutional networks", "semantic labels",
                            "boundary detection", "data augmentation"]),
    ("speech recognition", ["acoustic models", "language models",
                            "noise robustness", "feature extraction"]),
    ("recommender systems", ["collaborative filtering", "matrix factorization",
                             "cold start", "implicit feedback"]),
    ("distributed databases", ["consistency models", "query optimization",
                               "replication protocols", "transaction processing"]),
    ("sentiment analysis", ["opinion mining", "aspect extraction",
                            "lexicon-based methods", "domain adaptation"]),
    ("keyphrase generation", ["sequence-to-sequence models", "copy mechanism",
                              "absent keyphrases", "data augmentation"]),
]

VERBS = ["improves", "supports", "complements", "extends", "simplifies",
         "accelerates", "stabilizes", "generalizes"]
ADJS = ["robust", "efficient", "scalable", "interpretable", "accurate",
        "lightweight", "practical", "adaptive"]
NOUNS = ["framework", "approach", "pipeline", "system", "model", "method",
         "architecture", "algorithm"]
FILLER = [
    "Previous studies reported mixed results on standard benchmarks.",
    "We describe the experimental setup in detail.",
    "The results are consistent across all datasets.",
    "Table 2 summarizes the main findings.",
    "Further details are given in the appendix, e.g. hyperparameters and seeds.",
    "The code is available at https://example.org/toy/code.",
    "Questions can be sent to authors@example.org.",
    "This observation motivates the design of our <i>second</i> experiment.",
    "We repeat every run 3 times and report the mean.",
    "Fig. 4 shows the learning curves for both settings.",
    "The variance between runs is small.",
    "Errors are mostly caused by rare words.",
]


def sentence(rng, topic, phrase=None):
    subject = phrase or topic
    templates = [
        "The proposed {adj} {noun} for {subject} {verb} prior work on {other}.",
        "We study how {subject} interacts with {other} in {n} settings.",
        "Our {noun} {verb} {subject} while keeping the cost of {other} low.",
        "Experiments with {subject} show gains of {n}.{m} points over a {adj} baseline.",
        "A {adj} {noun} based on {subject} is compared against {other}.",
        "In practice, {subject} remains difficult when {other} is unavailable.",
    ]
    t = rng.choice(templates)
    return t.format(adj=rng.choice(ADJS), noun=rng.choice(NOUNS),
                    verb=rng.choice(VERBS), subject=subject,
                    other=rng.choice(TOPICS)[0], n=rng.randint(2, 40),
                    m=rng.randint(0, 9))


def make_doc(rng, index, topic, phrases, long_body):
    present_ta = phrases[:2]
    present_body = phrases[2:3]
    absent = phrases[3:]
    title = "{} {} for {} with {}".format(
        rng.choice(ADJS).capitalize(), rng.choice(NOUNS), topic.title(),
        present_ta[0].title())
    abstract = [sentence(rng, topic, present_ta[0]),
                sentence(rng, topic, present_ta[1]),
                sentence(rng, topic),
                "We release all resources at www.example.org/toy{}.".format(index)]
    body = []
    n_body = rng.randint(75, 110) if long_body else rng.randint(8, 16)
    for i in range(n_body):
        roll = rng.random()
        if i == 1:
            body.append(sentence(rng, topic, present_body[0]))
        elif roll < 0.25:
            body.append(sentence(rng, topic, rng.choice(present_ta)))
        elif roll < 0.45:
            body.append(rng.choice(FILLER))
        else:
            body.append(sentence(rng, topic))
    keyphrases = [topic] + present_ta + present_body + absent
    rng.shuffle(keyphrases)
    return {
        "id": "toy-{:02d}".format(index),
        "title": title,
        "abstract": " ".join(abstract),
        "body": " ".join(body).replace("Fig. 4", "Fig.\\n4"),
        "keyphrases": [k.title() if rng.random() < 0.3 else k for k in keyphrases],
    }


def main():
    rng = random.Random(2026)
    docs = []
    with open(os.path.join(DATA, "table1_article.jsonl")) as f:
        table1 = json.loads(f.readline())
    table1["id"] = "toy-00"
    docs.append(table1)
    for i in range(1, 20):
        topic, phrases = TOPICS[i % len(TOPICS)]
        phrases = list(phrases)
        rng.shuffle(phrases)
        docs.append(make_doc(rng, i, topic, phrases, long_body=(i % 4 == 1)))
    with open(os.path.join(DATA, "toy_corpus.jsonl"), "w") as f:
        for d in docs:
            f.write(json.dumps(d) + "\n")

    # Lexicon: Table 1 entries plus synonyms for part of the toy vocabulary,
    # so some keyphrases have synonyms and others do not.
    entries = {}
    with open(os.path.join(DATA, "table1_lexicon.tsv")) as f:
        for line in f:
            lemma, syns = line.rstrip("\n").split("\t")
            entries[lemma] = syns
    entries.update({
        "attention": "care,aid",
        "beam": "ray,shaft",
        "graph": "chart,diagram",
        "networks": "webs,meshes",
        "network": "web,mesh",
        "query": "question,inquiry",
        "ranking": "ordering,grading",
        "policy": "strategy,insurance",
        "reward": "payoff,wages",
        "image": "picture,icon",
        "speech": "address,voice",
        "noise": "racket,dissonance",
        "matrix": "ground_substance,intercellular_substance",
        "replication": "reproduction,echo",
        "opinion": "view,sentiment",
        "sentiment": "opinion,persuasion",
        "mining": "excavation,minelaying",
        "copy": "transcript,replicate",
        "translation": "interlingual_rendition,rendering",
        "models": "framework,example",
        "model": "framework,example",
        "robust": "full-bodied,racy",
        "efficient": "effective,economical",
        "results": "outcomes,consequences",
        "study": "survey,examine",
        "improves": "betters,amend",
        "low": "depleted,humble",
        "information_retrieval": "data_retrieval,search",
        "cold_start": "fresh_start",
        "data": "information,datum",
    })
    with open(os.path.join(DATA, "toy_lexicon.tsv"), "w") as f:
        for lemma in sorted(entries):
            f.write("{}\t{}\n".format(lemma, entries[lemma]))

    # Fixed predictions for the evaluation path: a mix of hits, near misses
    # and absent guesses, in model output order.
    prng = random.Random(7)
    with open(os.path.join(DATA, "toy_predictions.jsonl"), "w") as f:
        for d in docs:
            gold = [k.lower() for k in d["keyphrases"]]
            topic = TOPICS[prng.randrange(len(TOPICS))]
            preds = prng.sample(gold, k=min(len(gold), prng.randint(1, 4)))
            preds += prng.sample(topic[1], k=2)
            prng.shuffle(preds)
            f.write(json.dumps({"id": d["id"], "predictions": preds}) + "\n")


if __name__ == "__main__":
    main()
