from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from ..errors import WordSyntaxError

Word = Tuple[int, ...]


@dataclass(frozen=True)
class BraidWord:
    """Positive braid word. Letter i stands for the generator sigma_i."""

    letters: Word = ()
    strands: int = 3

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 2:
            raise ValueError(f"Strand count must be >= 2: {self.strands}")
        for i, x in enumerate(self.letters):
            if not (1 <= x <= self.strands - 1):
                raise WordSyntaxError(
                    f"Letter {x} at index {i} is not a generator of B_{self.strands}"
                )

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self):
        return format_word(self.letters)


def parse_word(text: str, strands: int | None = None, signed: bool = False) -> Word:
    """Parse "1121" or "1 1 2 1" (whitespace form required for letters >= 10)."""
    text = text.strip()
    if text in ("", "e", "()"):
        return ()

    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and not text.lstrip("-").isdigit():
        raise WordSyntaxError(f"Cannot parse braid word: {text!r}")

    if len(tokens) == 1 and "-" not in text:
        letters = tuple(int(c) for c in text)
    else:
        try:
            letters = tuple(int(tok) for tok in tokens)
        except ValueError as exc:
            raise WordSyntaxError(f"Cannot parse braid word: {text!r}") from exc

    for i, x in enumerate(letters):
        if x == 0 or (x < 0 and not signed):
            raise WordSyntaxError(f"Invalid letter {x} at index {i} in {text!r}")
        if strands is not None and abs(x) >= strands:
            raise WordSyntaxError(
                f"Letter {x} at index {i} is not a generator of B_{strands}"
            )
    return letters


def format_word(letters: Sequence[int]) -> str:
    if len(letters) == 0:
        return "1"
    if all(1 <= x <= 9 for x in letters):
        return "".join(str(x) for x in letters)
    return " ".join(str(x) for x in letters)


def flip(n: int, letters: Sequence[int]) -> Word:
    """Letterwise sigma_i -> sigma_{n-i}; signs are kept."""
    return tuple((n - x) if x > 0 else -(n + x) for x in letters)


def flip3(letters: Sequence[int]) -> Word:
    return flip(3, letters)


def inverse_word(letters: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(letters))


def free_reduce(letters: Sequence[int]) -> Word:
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def all_words(max_len: int, strands: int = 3) -> Iterator[Word]:
    """All positive words of length <= max_len, shorter first."""
    layer = [()]
    yield ()
    for _ in range(max_len):
        layer = [w + (x,) for w in layer for x in range(1, strands)]
        yield from layer
