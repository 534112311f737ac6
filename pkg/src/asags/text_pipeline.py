"""Text preprocessing: tokenization, sentence boundaries, stemming, stop words.

Turns raw answer text into the token stream the aligner and scorers consume.
All functions are pure; a ``ProcessedText`` is immutable once built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from importlib import resources

from . import porter

WORD = "word"
NUMBER = "number"
PUNCTUATION = "punctuation"

# Words keep internal apostrophes/hyphens; digit runs may carry an ordinal
# suffix; any other non-space character stands alone as punctuation.
_TOKEN_RE = re.compile(
    r"\d+(?i:st|nd|rd|th)?"
    r"|[^\W\d_]+(?:['’-][^\W\d_]+)*"
    r"|\S"
)
_SENTENCE_FINAL = frozenset(".!?")


@dataclass(frozen=True)
class Token:
    """One unit of an answer: a word, a number, or a punctuation symbol."""

    surface: str
    normalized: str
    kind: str
    position: int
    sentence_index: int = 0
    stem: str = ""
    is_stopword: bool = False


@dataclass(frozen=True)
class ProcessedText:
    """A fully preprocessed answer.

    ``content_tokens`` is the subsequence of ``all_tokens`` left after
    removing punctuation and stop words; matching and scoring operate on it.
    """

    raw: str
    all_tokens: tuple[Token, ...]
    content_tokens: tuple[Token, ...]
    sentence_count: int

    def content_keys(self, attr: str = "normalized") -> tuple[str, ...]:
        return tuple(getattr(t, attr) for t in self.content_tokens)


@dataclass(frozen=True)
class StopList:
    """Case-folded stop words; membership is exact on the normalized form."""

    words: frozenset[str] = field(default_factory=frozenset)

    @classmethod
    def from_file(cls, path) -> "StopList":
        words = set()
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                entry = line.split("#", 1)[0].strip().lower()
                if entry:
                    words.add(entry)
        return cls(frozenset(words))

    @classmethod
    def default(cls) -> "StopList":
        ref = resources.files("asags").joinpath("data/stopwords.txt")
        words = set()
        for line in ref.read_text(encoding="utf-8").splitlines():
            entry = line.split("#", 1)[0].strip().lower()
            if entry:
                words.add(entry)
        return cls(frozenset(words))

    @classmethod
    def empty(cls) -> "StopList":
        return cls(frozenset())

    def __contains__(self, normalized: str) -> bool:
        return normalized in self.words


def _classify(surface: str) -> str:
    if surface[0].isdigit():
        return NUMBER
    if surface[0].isalpha():
        return WORD
    return PUNCTUATION


def tokenize(raw: str) -> list[Token]:
    """Split raw text into word, number, and punctuation tokens.

    Every non-whitespace character of ``raw`` lands in exactly one token's
    surface, in the original order.
    """
    tokens = []
    for pos, match in enumerate(_TOKEN_RE.finditer(raw)):
        surface = match.group()
        tokens.append(
            Token(
                surface=surface,
                normalized=surface.lower(),
                kind=_classify(surface),
                position=pos,
            )
        )
    return tokens


def split_sentences(tokens: list[Token]) -> list[Token]:
    """Assign sentence indices.

    A sentence ends at ., ! or ? when a capitalized word (or nothing at all)
    follows; abbreviations like "e.g." therefore do not split.
    """
    out = []
    index = 0
    for i, token in enumerate(tokens):
        out.append(replace(token, sentence_index=index))
        if token.kind == PUNCTUATION and token.surface in _SENTENCE_FINAL:
            nxt = tokens[i + 1] if i + 1 < len(tokens) else None
            if nxt is not None and nxt.kind == WORD and nxt.surface[0].isupper():
                index += 1
    return out


def porter_stem(word: str) -> str:
    """Stem one case-folded word (see :mod:`asags.porter`)."""
    return porter.stem(word)


def preprocess(raw: str, stoplist: StopList | None = None) -> ProcessedText:
    """Run the full pipeline: tokenize, sentence-split, stem, flag stop words."""
    if stoplist is None:
        stoplist = StopList.default()
    tokens = split_sentences(tokenize(raw))
    finished = []
    for token in tokens:
        stem = porter.stem(token.normalized) if token.kind == WORD else token.normalized
        finished.append(
            replace(
                token,
                stem=stem,
                is_stopword=token.kind != PUNCTUATION and token.normalized in stoplist,
            )
        )
    content = tuple(
        t for t in finished if t.kind != PUNCTUATION and not t.is_stopword
    )
    sentence_count = finished[-1].sentence_index + 1 if finished else 0
    return ProcessedText(
        raw=raw,
        all_tokens=tuple(finished),
        content_tokens=content,
        sentence_count=sentence_count,
    )
