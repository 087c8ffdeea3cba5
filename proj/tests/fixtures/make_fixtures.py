#!/usr/bin/env python3
"""Builds the test fixture corpus and the expected-values manifest.

Everything the C++ suites compare against is computed here, independently of
the library: tokenization, sentence splitting, response filtering, chunk
containment, pattern matching and commonness are all reimplemented in plain
Python. Run from this directory:

    python3 make_fixtures.py
"""

import json
import math
import os
import re
from collections import Counter, OrderedDict

HERE = os.path.dirname(os.path.abspath(__file__))

# ---------------------------------------------------------------------------
# corpus text

FOREGROUND = OrderedDict([
    ("d01", """Scalable lookup in distributed hash tables
Distributed hash tables provide scalable lookup for peer networks. Each node stores a routing table of peer identifiers. We measure lookup latency on large overlay networks. The protocol reduces maintenance traffic.
"""),
    ("d02", """Ranking models for document retrieval
We compare ranking models for document retrieval. The weighted scoring function combines term frequency and document length. A learned model improves early precision on two benchmark collections.
"""),
    ("d03", """Fast consensus protocols for replicated state machines
Consensus protocols order requests in replicated state machines. The leader assigns sequence numbers under partial synchrony. A quorum of replicas accepts each decision. This design tolerates crash failures.
"""),
    ("d04", """Keyphrase extraction from scientific abstracts
We study keyphrase extraction from scientific abstracts. Candidate phrases receive frequency and position features. A simple classifier selects descriptive phrases. Annotators prefer short technical terms.
"""),
    ("d05", """Adaptive caching for content delivery networks
Content delivery networks store popular objects near clients. An adaptive policy tracks the rate of change for each object. Cache hit ratio improves under bursty workloads. The gain reaches 30 percent on real traces.
"""),
    ("d06", """Coordination in multi-agent systems
Autonomous agents coordinate through market mechanisms in multi-agent systems. Each agent submits bids for shared resources under a budget. The allocation converges to a stable equilibrium. Simulation shows robust behavior with 50 agents.
"""),
    ("d07", """Spectral clustering of similarity graphs
Spectral clustering divides similarity graphs into coherent groups. The method computes eigenvectors of the graph laplacian. A sampling step lowers the cost on large graphs. Quality of clusters remains high.
"""),
    ("d08", """Measurement of packet loss in wireless networks
We measure packet loss in dense wireless networks. Interference from nearby links causes most losses. A simple model predicts loss rate from signal strength. The model guides channel selection.
"""),
    ("d09", """Consistent replication under network partitions
Replicated storage systems face a tradeoff between consistency and availability. Our protocol maintains strong consistency under network partitions. Recovery uses a versioned log of updates. Degree of replication controls durability.
"""),
    ("d10", """Auction mechanisms for sponsored search markets
Sponsored search markets allocate advertising slots by auction. Bidders adjust bids to maximize expected utility. A truthful mechanism removes incentives for manipulation. Revenue stays within 5 percent of the optimum.
"""),
])

BACKGROUND = OrderedDict([
    ("b01", """Overlay networks for distributed lookup
Overlay networks route queries between peer nodes. Distributed hash tables provide scalable lookup in large networks. The routing table size stays small in structured networks. Peer networks with consistent routing reduce lookup latency.
"""),
    ("b02", """Caching strategies for content networks
Content delivery networks store popular objects near clients. A caching policy balances hit ratio and freshness in edge networks. Large networks benefit from adaptive caching.
"""),
    ("b03", """Ranking functions for text retrieval
Term frequency drives most ranking functions. Document length normalization improves retrieval precision. We compare weighted scoring models on benchmark collections. Early precision matters in ranking models for document retrieval.
"""),
    ("b04", """Consensus in replicated systems
Replicated systems reach consensus despite crash failures. The leader assigns sequence numbers to requests. A quorum of replicas accepts each decision in stable networks. Consensus protocols tolerate crash failures in replicated state machines.
"""),
    ("b05", """Keyphrase ranking with frequency features
Keyphrase extraction selects descriptive phrases from documents. Term frequency and position features drive the ranking. Technical terms dominate human selections. Keyphrase extraction benefits from candidate phrases with technical terms.
"""),
    ("b06", """Market mechanisms for resource allocation
Autonomous agents trade shared resources in market mechanisms. Each agent submits bids under a budget. The allocation converges to a stable equilibrium in open networks. Market mechanisms price shared resources.
"""),
    ("b07", """Clustering methods for large graphs
Spectral clustering divides similarity graphs into groups. The method computes eigenvectors of the graph laplacian. Sampling lowers the cost on large graphs. Spectral clustering of similarity graphs scales with sampling.
"""),
    ("b08", """Wireless measurement studies
Packet loss in wireless networks depends on interference. Signal strength predicts loss rate in dense networks. Channel selection improves throughput in wireless networks. Packet loss and signal strength vary across wireless networks.
"""),
    ("b09", """Replication protocols for storage systems
Storage systems replicate updates for durability. Strong consistency costs availability under network partitions. A versioned log records updates in wide networks. Network partitions force a replication tradeoff for strong consistency.
"""),
    ("b10", """Sponsored search auctions
Sponsored search markets allocate advertising slots by auction. Truthful mechanisms remove incentives for manipulation. Revenue approaches the optimum in thick markets. Auction mechanisms shape expected utility in sponsored search markets.
"""),
    ("b11", """Peer networks and latency
Lookup latency in peer networks grows with network size. Routing tables trade memory for latency in overlay networks. Maintenance traffic stays low in stable networks.
"""),
    ("b12", """Feature weighting for classifiers
A classifier weighs term frequency and position features. Scoring functions combine term frequency with document length. Simple models remain strong baselines in most networks.
"""),
])

LEXICON = {
    # determiners, prepositions, conjunctions, pronouns
    "the": "DT", "a": "DT", "an": "DT", "each": "DT", "this": "DT",
    "in": "IN", "for": "IN", "of": "IN", "on": "IN", "under": "IN",
    "from": "IN", "with": "IN", "near": "IN", "through": "IN", "between": "IN",
    "by": "IN", "within": "IN", "into": "IN", "and": "CC", "to": "TO",
    "we": "PRP", "our": "PRP$",
    # cardinals
    "30": "CD", "50": "CD", "5": "CD", "two": "CD",
    # adjectives
    "scalable": "JJ", "distributed": "JJ", "large": "JJ", "weighted": "JJ",
    "learned": "JJ", "early": "JJ", "fast": "JJ", "replicated": "JJ",
    "partial": "JJ", "scientific": "JJ", "simple": "JJ", "descriptive": "JJ",
    "short": "JJ", "technical": "JJ", "adaptive": "JJ", "popular": "JJ",
    "bursty": "JJ", "real": "JJ", "multi-agent": "JJ", "autonomous": "JJ",
    "shared": "JJ", "stable": "JJ", "robust": "JJ", "spectral": "JJ",
    "coherent": "JJ", "high": "JJ", "wireless": "JJ", "dense": "JJ",
    "nearby": "JJ", "consistent": "JJ", "strong": "JJ", "versioned": "JJ",
    "sponsored": "JJ", "expected": "JJ", "truthful": "JJ", "most": "JJS",
    "structured": "JJ", "edge": "JJ", "open": "JJ", "wide": "JJ", "thick": "JJ",
    "small": "JJ", "low": "JJ",
    # nouns
    "lookup": "NN", "hash": "NN", "tables": "NNS", "peer": "NN",
    "networks": "NNS", "node": "NN", "routing": "NN", "table": "NN",
    "identifiers": "NNS", "latency": "NN", "overlay": "NN", "protocol": "NN",
    "maintenance": "NN", "traffic": "NN", "ranking": "NN", "models": "NNS",
    "document": "NN", "retrieval": "NN", "scoring": "NN", "function": "NN",
    "term": "NN", "frequency": "NN", "length": "NN", "model": "NN",
    "precision": "NN", "benchmark": "NN", "collections": "NNS",
    "consensus": "NN", "protocols": "NNS", "state": "NN", "machines": "NNS",
    "requests": "NNS", "leader": "NN", "sequence": "NN", "numbers": "NNS",
    "synchrony": "NN", "quorum": "NN", "replicas": "NNS", "decision": "NN",
    "design": "NN", "crash": "NN", "failures": "NNS", "keyphrase": "NN",
    "extraction": "NN", "abstracts": "NNS", "candidate": "NN",
    "phrases": "NNS", "position": "NN", "features": "NNS", "classifier": "NN",
    "annotators": "NNS", "terms": "NNS", "caching": "NN", "content": "NN",
    "delivery": "NN", "objects": "NNS", "clients": "NNS", "policy": "NN",
    "rate": "NN", "change": "NN", "object": "NN", "cache": "NN", "hit": "NN",
    "ratio": "NN", "workloads": "NNS", "gain": "NN", "percent": "NN",
    "traces": "NNS", "coordination": "NN", "systems": "NNS", "agents": "NNS",
    "market": "NN", "mechanisms": "NNS", "agent": "NN", "bids": "NNS",
    "resources": "NNS", "budget": "NN", "allocation": "NN",
    "equilibrium": "NN", "simulation": "NN", "behavior": "NN",
    "clustering": "NN", "similarity": "NN", "graphs": "NNS", "groups": "NNS",
    "method": "NN", "eigenvectors": "NNS", "graph": "NN", "laplacian": "NN",
    "sampling": "NN", "step": "NN", "cost": "NN", "quality": "NN",
    "clusters": "NNS", "measurement": "NN", "packet": "NN", "loss": "NN",
    "interference": "NN", "links": "NNS", "losses": "NNS", "signal": "NN",
    "strength": "NN", "channel": "NN", "selection": "NN", "replication": "NN",
    "network": "NN", "partitions": "NNS", "storage": "NN", "tradeoff": "NN",
    "consistency": "NN", "availability": "NN", "recovery": "NN", "log": "NN",
    "updates": "NNS", "degree": "NN", "durability": "NN", "auction": "NN",
    "search": "NN", "markets": "NNS", "advertising": "NN", "slots": "NNS",
    "bidders": "NNS", "utility": "NN", "mechanism": "NN", "incentives": "NNS",
    "manipulation": "NN", "revenue": "NN", "optimum": "NN", "queries": "NNS",
    "nodes": "NNS", "size": "NN", "strategies": "NNS", "freshness": "NN",
    "functions": "NNS", "text": "NN", "normalization": "NN", "studies": "NNS",
    "throughput": "NN", "memory": "NN", "feature": "NN", "weighting": "NN",
    "classifiers": "NNS", "baselines": "NNS", "auctions": "NNS",
    "selections": "NNS", "documents": "NNS", "human": "JJ",
    # verbs
    "provide": "VBP", "stores": "VBZ", "measure": "VBP", "reduces": "VBZ",
    "compare": "VBP", "combines": "VBZ", "improves": "VBZ", "order": "VBP",
    "assigns": "VBZ", "accepts": "VBZ", "tolerates": "VBZ", "study": "VBP",
    "receive": "VBP", "selects": "VBZ", "prefer": "VBP", "store": "VBP",
    "tracks": "VBZ", "reaches": "VBZ", "coordinate": "VBP", "submits": "VBZ",
    "converges": "VBZ", "shows": "VBZ", "divides": "VBZ", "computes": "VBZ",
    "lowers": "VBZ", "remains": "VBZ", "causes": "VBZ", "predicts": "VBZ",
    "guides": "VBZ", "face": "VBP", "maintains": "VBZ", "uses": "VBZ",
    "controls": "VBZ", "allocate": "VBP", "adjust": "VBP", "maximize": "VB",
    "removes": "VBZ", "stays": "VBZ", "route": "VBP", "balances": "VBZ",
    "benefit": "VBP", "drives": "VBZ", "reach": "VBP", "drive": "VBP",
    "dominate": "VBP", "trade": "VBP", "depends": "VBZ", "replicate": "VBP",
    "costs": "VBZ", "records": "VBZ", "remove": "VBP", "approaches": "VBZ",
    "grows": "VBZ", "weighs": "VBZ", "combine": "VBP",
}

NP_TAGS = {"DT", "PDT", "CD", "JJ", "JJR", "JJS", "NN", "NNS", "NNP", "NNPS",
           "PRP", "PRP$"}
VP_TAGS = {"MD", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}
ADJ_TAGS = {"JJ", "JJR", "JJS"}
NOUN_TAGS = {"NN", "NNS", "NNP", "NNPS"}

BLOCKLIST = [
    "emptyanswer",
    "na",
    "nothing",
    "optional",
    "aa",
    "keyword",
    "Keyword/Keyphrase 1:  Keyword/Keyphrase 1:",
    "Keyword/Keyphrase 1:",
    "NA",
    "N/A",
    "n/a",
    "N/a",
    "N\\A",
    "Keyword/Keyphrase 1:  vvvvvvvvvvvvvvv",
    "Keyword/Keyphrase 1:  vvvvvvvvvvvvvvvvvvvvvvvvvvvvv",
    "Keyword query",
    "Keywords",
    "Keywords in a search form",
    "keywords, titles, and full-text.",
    "vvvvvvvvKeyword/Keyphrase 1:",
]

# (doc_id, assignment_id, phrase)
RESPONSES = [
    # a01 / d01: 1 spurious + 1 abstractive + 3 extractive
    ("d01", "a01", "N/A"),
    ("d01", "a01", "Distributed Hash Tables"),
    ("d01", "a01", "routing table"),
    ("d01", "a01", "lookup latency."),
    ("d01", "a01", "peer-to-peer systems"),
    # a02 / d02: 1 over-length + 1 abstractive + 3 extractive
    ("d02", "a02", "the weighted scoring function combines term frequency"),
    ("d02", "a02", "ranking models"),
    ("d02", "a02", "term frequency"),
    ("d02", "a02", "early precision"),
    ("d02", "a02", "information retrieval"),
    # a03 / d03: 1 spurious + 1 abstractive + 4 extractive
    ("d03", "a03", "nothing"),
    ("d03", "a03", "consensus protocols"),
    ("d03", "a03", "replicated state machines"),
    ("d03", "a03", "partial synchrony"),
    ("d03", "a03", "crash failures"),
    ("d03", "a03", "fault tolerance"),
    # a04 / d04: 1 over-length + 6 extractive
    ("d04", "a04", "candidate phrases receive frequency and position features"),
    ("d04", "a04", "keyphrase extraction"),
    ("d04", "a04", "scientific abstracts"),
    ("d04", "a04", "candidate phrases"),
    ("d04", "a04", "technical terms"),
    ("d04", "a04", "descriptive phrases"),
    ("d04", "a04", "classifier"),
    # a05 / d05: 1 spurious + 1 abstractive + 3 extractive
    ("d05", "a05", "keyword"),
    ("d05", "a05", "adaptive caching"),
    ("d05", "a05", "rate of change"),
    ("d05", "a05", "cache hit ratio"),
    ("d05", "a05", "web caching"),
    # a06 / d06: 1 over-length + 1 abstractive + 6 extractive
    ("d06", "a06", "autonomous agents coordinate through market mechanisms"),
    ("d06", "a06", "multi-agent systems"),
    ("d06", "a06", "market mechanisms"),
    ("d06", "a06", "shared resources"),
    ("d06", "a06", "stable equilibrium"),
    ("d06", "a06", "Coordination"),
    ("d06", "a06", "converges"),
    ("d06", "a06", "agent cooperation"),
    # a07 / d07: 1 spurious + 1 abstractive + 4 extractive
    ("d07", "a07", "Keywords"),
    ("d07", "a07", "spectral clustering"),
    ("d07", "a07", "similarity graphs"),
    ("d07", "a07", "graph laplacian"),
    ("d07", "a07", "quality of clusters"),
    ("d07", "a07", "graph mining"),
    # a08 / d08: 1 over-length + 4 extractive
    ("d08", "a08", "a simple model predicts loss rate from signal strength"),
    ("d08", "a08", "packet loss"),
    ("d08", "a08", "wireless networks"),
    ("d08", "a08", "signal strength"),
    ("d08", "a08", "networks"),
    # a09 / d09: 1 spurious + 1 abstractive + 5 extractive
    ("d09", "a09", "optional"),
    ("d09", "a09", "strong consistency"),
    ("d09", "a09", "network partitions"),
    ("d09", "a09", "log of updates"),
    ("d09", "a09", "degree of replication"),
    ("d09", "a09", "durability"),
    ("d09", "a09", "data replication"),
    # a10 / d10: 1 spurious + 1 abstractive + 4 extractive
    ("d10", "a10", "emptyanswer"),
    ("d10", "a10", "auction mechanisms"),
    ("d10", "a10", "sponsored search markets"),
    ("d10", "a10", "truthful mechanism"),
    ("d10", "a10", "expected utility"),
    ("d10", "a10", "online advertising"),
]

TOKEN_RE = re.compile(r"[A-Za-z0-9]+(?:-[A-Za-z0-9]+)*")


def tokenize(text):
    return [m.group(0) for m in TOKEN_RE.finditer(text)]


def lower_tokens(text):
    return [t.lower() for t in tokenize(text)]


def sentences_of(text):
    """Token index ranges; a boundary follows each '.' (the fixture never
    uses '!'/'?' or abbreviations, and every new sentence starts uppercase)."""
    spans = [(m.start(), m.end()) for m in TOKEN_RE.finditer(text)]
    boundaries = []
    for i in range(len(spans) - 1):
        gap = text[spans[i][1]:spans[i + 1][0]]
        if "." in gap:
            nxt = text[spans[i + 1][0]]
            assert not nxt.islower(), "fixture sentences must start uppercase"
            boundaries.append(i + 1)
    ranges = []
    start = 0
    for b in boundaries + [len(spans)]:
        if b > start:
            ranges.append((start, b))
            start = b
    return ranges


def contains(hay, needle):
    n, m = len(hay), len(needle)
    if m == 0 or m > n:
        return False
    return any(hay[i:i + m] == needle for i in range(n - m + 1))


def occurrence_spans(hay, needle):
    m = len(needle)
    return [(i, i + m) for i in range(len(hay) - m + 1) if hay[i:i + m] == needle]


def write(path, content):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(content)


def make_ann(text):
    toks = tokenize(text)
    tags = [LEXICON[t.lower()] for t in toks]
    sents = sentences_of(text)
    lines = []
    for (s_begin, s_end) in sents:
        prev = "O"
        for i in range(s_begin, s_end):
            tag = tags[i]
            if tag in NP_TAGS:
                chunk = "I-NP" if prev in ("B-NP", "I-NP") else "B-NP"
            elif tag in VP_TAGS:
                chunk = "I-VP" if prev in ("B-VP", "I-VP") else "B-VP"
            else:
                chunk = "O"
            lines.append(f"{toks[i]}\t{tag}\t{chunk}")
            prev = chunk
        lines.append("")
    while lines and lines[-1] == "":
        lines.pop()
    return "\n".join(lines) + "\n"


def chunk_ranges(tags, sents, tagset):
    ranges = []
    for (s_begin, s_end) in sents:
        i = s_begin
        while i < s_end:
            if tags[i] in tagset:
                j = i
                while j < s_end and tags[j] in tagset:
                    j += 1
                ranges.append((i, j))
                i = j
            else:
                i += 1
    return ranges


def matches_t(tags):
    if not tags:
        return False
    if len(tags) == 1:
        return tags[0] in NOUN_TAGS
    if any(t not in ADJ_TAGS | NOUN_TAGS for t in tags[:-1]):
        return False
    return tags[-1] in NOUN_TAGS or tags[-1] == "CD"


def matches_x(tokens, tags):
    if matches_t(tags):
        return True
    n = len(tags)
    for i in range(n - 2):
        if tags[i] not in ADJ_TAGS | NOUN_TAGS:
            break
        if tags[i] not in NOUN_TAGS:
            continue
        if tokens[i + 1] != "of":
            continue
        rest = tags[i + 2:]
        if matches_t(rest) or (len(rest) == 1 and rest[0] == "CD"):
            return True
    return False


def maximal_spans(tokens, tags, s_begin, s_end, matcher):
    spans = []
    for b in range(s_begin, s_end):
        for e in range(b + 1, s_end + 1):
            if matcher(tokens[b:e], tags[b:e]):
                spans.append((b, e))
    return [s for s in spans
            if not any(o != s and o[0] <= s[0] and s[1] <= o[1] for o in spans)]


def main():
    for rel in ("foreground", "background", "annotations"):
        os.makedirs(os.path.join(HERE, rel), exist_ok=True)

    for doc_id, text in FOREGROUND.items():
        write(os.path.join(HERE, "foreground", doc_id + ".txt"), text)
        write(os.path.join(HERE, "annotations", doc_id + ".ann"), make_ann(text))
    for doc_id, text in BACKGROUND.items():
        write(os.path.join(HERE, "background", doc_id + ".txt"), text)
    write(os.path.join(HERE, "blocklist.txt"), "\n".join(BLOCKLIST) + "\n")

    rows = ["doc_id,assignment_id,phrase"]
    for doc_id, assignment_id, phrase in RESPONSES:
        quoted = phrase
        if "," in phrase or '"' in phrase:
            quoted = '"' + phrase.replace('"', '""') + '"'
        rows.append(f"{doc_id},{assignment_id},{quoted}")
    write(os.path.join(HERE, "responses.csv"), "\n".join(rows) + "\n")

    # ---------------- expected values ----------------
    docs = {}
    for doc_id, text in FOREGROUND.items():
        toks = lower_tokens(text)
        docs[doc_id] = {
            "tokens": toks,
            "sents": sentences_of(text),
            "tags": [LEXICON[t] for t in toks],
        }

    manifest = {"documents": {}, "total_tokens": 0, "total_sentences": 0}
    for doc_id, d in docs.items():
        manifest["documents"][doc_id] = {
            "tokens": len(d["tokens"]),
            "sentences": len(d["sents"]),
        }
        manifest["total_tokens"] += len(d["tokens"])
        manifest["total_sentences"] += len(d["sents"])

    # response filtering funnel
    blocked = {b.strip().lower() for b in BLOCKLIST}
    resp = [{"doc": d, "assignment": a, "phrase": p,
             "tokens": lower_tokens(p)} for d, a, p in RESPONSES]
    initial = len(resp)

    def is_spurious(r):
        folded = r["phrase"].strip().lower()
        if folded in blocked:
            return True
        text = FOREGROUND[r["doc"]]
        title, _, body = text.partition("\n")
        return folded in (title.strip().lower(), body.strip().lower())

    no_spur = [r for r in resp if not is_spurious(r)]
    short = [r for r in no_spur if len(r["tokens"]) <= 5]
    extractive = [r for r in short
                  if contains(docs[r["doc"]]["tokens"], r["tokens"])]
    positives = list(OrderedDict.fromkeys(
        (r["doc"], tuple(r["tokens"])) for r in extractive))

    funnel = {
        "initial": initial,
        "after_spurious": len(no_spur),
        "after_length": len(short),
        "after_extractive": len(extractive),
        "unique_positives": len(positives),
        "negatives": 10 * len(positives),
    }

    # sampling universe must cover the negatives comfortably
    universe = set()
    for doc_id, d in docs.items():
        for (s_begin, s_end) in d["sents"]:
            for i in range(s_begin, s_end):
                for n in range(1, 6):
                    if i + n <= s_end:
                        universe.add((doc_id, tuple(d["tokens"][i:i + n])))
    universe -= set(positives)
    assert len(universe) >= funnel["negatives"], "universe too small"

    # phrase length histogram over spurious-filtered responses, cap 10
    length_counts = [0] * 11
    for r in no_spur:
        n = len(r["tokens"])
        if n > 10:
            length_counts[10] += 1
        elif n >= 1:
            length_counts[n - 1] += 1
    phrase_length = {
        "labels": [str(i) for i in range(1, 11)] + [">10"],
        "counts": length_counts,
        "total": sum(length_counts),
    }

    # keyphrase count per assignment, over the raw responses
    per_assignment = Counter(r["assignment"] for r in resp)
    count_hist = Counter(per_assignment.values())
    keyphrase_count = {
        "labels": [str(c) for c in range(5, 17)],
        "counts": [count_hist.get(c, 0) for c in range(5, 17)],
        "total": len(per_assignment),
    }
    assert all(5 <= c <= 16 for c in per_assignment.values())

    extractive_fraction_pct = 100.0 * len(extractive) / len(short)

    # first sentence stats over unique extractive pairs
    in_first = 0
    for doc_id, phrase in positives:
        d = docs[doc_id]
        s0 = d["sents"][0]
        if any(s0[0] <= b and e <= s0[1]
               for b, e in occurrence_spans(d["tokens"], list(phrase))):
            in_first += 1
    uniq_total = 0
    uniq_first = 0
    for d in docs.values():
        s0 = d["sents"][0]
        uniq_total += len(set(d["tokens"]))
        uniq_first += len(set(d["tokens"][s0[0]:s0[1]]))
    first_sentence = {
        "pct_keyphrases": 100.0 * in_first / len(positives),
        "pct_unique_terms": 100.0 * uniq_first / uniq_total,
        "unique_extractive_phrases": len(positives),
    }

    # grammatical category fractions over unique extractive pairs
    np_n = vp_n = tech_n = 0
    for doc_id, phrase in positives:
        d = docs[doc_id]
        toks, tags, sents = d["tokens"], d["tags"], d["sents"]
        nps = chunk_ranges(tags, sents, NP_TAGS)
        vps = chunk_ranges(tags, sents, VP_TAGS)
        spans = occurrence_spans(toks, list(phrase))
        if any(c[0] <= b and e <= c[1] for b, e in spans for c in nps):
            np_n += 1
        if any(c[0] <= b and e <= c[1] for b, e in spans for c in vps):
            vp_n += 1
        part_tech = False
        for b, e in spans:
            if matches_t(tags[b:e]):
                part_tech = True
                break
            sent = next((s for s in sents if s[0] <= b and e <= s[1]), None)
            if sent is None:
                continue
            for mb, me in maximal_spans(toks, tags, sent[0], sent[1],
                                        lambda tk, tg: matches_t(tg)):
                if mb <= b and e <= me:
                    part_tech = True
                    break
            if part_tech:
                break
        if part_tech:
            tech_n += 1
    denom = float(len(positives))
    grammatical = {
        "pct_partial_np": 100.0 * np_n / denom,
        "pct_partial_vp": 100.0 * vp_n / denom,
        "pct_partial_technical_term": 100.0 * tech_n / denom,
        "unique_extractive_phrases": len(positives),
    }

    # background index and commonness histograms
    bg_tf = Counter()
    bg_tokens = 0
    for text in BACKGROUND.values():
        toks = lower_tokens(text)
        bg_tokens += len(toks)
        for (s_begin, s_end) in sentences_of(text):
            for i in range(s_begin, s_end):
                for n in range(1, 6):
                    if i + n <= s_end:
                        bg_tf[tuple(toks[i:i + n])] += 1
    tf_max = {}
    for gram, tf in bg_tf.items():
        order = len(gram)
        tf_max[order] = max(tf_max.get(order, 0), tf)

    def commonness(phrase):
        tf = bg_tf.get(tuple(phrase), 0)
        if tf == 0:
            return 0.0
        top = tf_max[len(phrase)]
        if top <= 1 or tf == top:
            return 1.0
        return math.log(tf) / math.log(top)

    unique_phrases = sorted({tuple(r["tokens"]) for r in short})
    commonness_hists = {}
    for cutoff in (0, 5, 10, 15, 20):
        counts = [0] * 20
        for phrase in unique_phrases:
            if bg_tf.get(phrase, 0) < cutoff:
                continue
            v = commonness(list(phrase))
            b = min(int(v * 20), 19)
            counts[b] += 1
        commonness_hists[str(cutoff)] = {"counts": counts, "total": sum(counts)}

    expected = {
        "corpus_manifest": manifest,
        "funnel": funnel,
        "phrase_length": phrase_length,
        "keyphrase_count": keyphrase_count,
        "extractive_fraction_pct": extractive_fraction_pct,
        "first_sentence": first_sentence,
        "grammatical": grammatical,
        "background": {
            "documents": len(BACKGROUND),
            "total_tokens": bg_tokens,
            "tf_max_unigram": tf_max[1],
            "networks_tf": bg_tf[("networks",)],
        },
        "commonness_histograms": commonness_hists,
    }
    write(os.path.join(HERE, "expected.json"),
          json.dumps(expected, indent=2) + "\n")
    print(json.dumps(expected["funnel"], indent=2))
    print("phrase lengths:", phrase_length["counts"])
    print("keyphrase counts:", keyphrase_count["counts"])
    print("extractive %:", extractive_fraction_pct)
    print("first sentence:", first_sentence)
    print("grammatical:", grammatical)
    print("bg tokens:", bg_tokens, "tf_max[1]:", tf_max[1],
          "networks tf:", bg_tf[("networks",)])


if __name__ == "__main__":
    main()
