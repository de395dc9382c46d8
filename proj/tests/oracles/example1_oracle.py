#!/usr/bin/env python3
# Copyright 2026 The Simplex Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent enumeration of the first replacement in the Example 1 run.

Re-derives, from the fixture files alone, every candidate for
"indispensable" in "oregano is an indispensable ingredient in greek cuisine ."
under word-embedding mode with phi = 0, and prints each candidate's unigram
perplexity. The fixture classifier's rule (complex iff len >= 7 and fewer than
20 occurrences) and the above-mean cosine filter are re-implemented here.
"""
import collections
import math
import os

HERE = os.path.dirname(os.path.abspath(__file__))
FIX = os.path.join(HERE, "..", "fixtures")

corpus = [l.split() for l in open(os.path.join(FIX, "corpus.txt")) if l.strip()]
counts = collections.Counter(w for s in corpus for w in s)
V, T = len(counts), sum(counts.values())
eps = 1.0 / (V * T)

def p(w):
    return counts[w] / V if w in counts else eps

def pp1(tokens):
    return 2 ** (-sum(math.log2(p(w)) for w in tokens) / len(tokens))

vectors = {}
for i, line in enumerate(open(os.path.join(FIX, "vectors.txt"))):
    f = line.split()
    if i == 0 and len(f) == 2:
        continue
    vectors[f[0]] = [float(x) for x in f[1:]]

def cos(a, b):
    return sum(x * y for x, y in zip(a, b)) / math.sqrt(
        sum(x * x for x in a) * sum(y * y for y in b))

fetched = ["essential", "necessary", "vital", "crucial", "basic"]  # thesaurus order
simple = [w for w in fetched if not (len(w) >= 7 and counts[w] < 20)]
cosines = [(w, cos(vectors["indispensable"], vectors[w])) for w in simple if w in vectors]
mean = sum(c for _, c in cosines) / len(cosines)
kept = [w for w, c in cosines if c > mean]

sentence = "oregano is an indispensable ingredient in greek cuisine .".split()
print("simple:", simple)
print("kept:", kept)
best = None
for w in kept:
    cand = list(sentence)
    cand[3] = w
    cand[2] = "an" if w[0] in "aeiou" else "a"
    score = pp1(cand)
    print(f"{' '.join(cand)}\t{score:.12f}")
    if best is None or score < best[1]:
        best = (w, score)
print("winner:", best[0])
