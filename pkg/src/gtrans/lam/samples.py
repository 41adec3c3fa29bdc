"""Small terms on which the seven strategies visibly disagree."""
from .terms import parse_term

SAMPLE_TEXTS = (
    r"\x. (\y. y) z",
    r"(\x. (\y. y) z) y",
    r"x ((\x. x) y)",
    r"(\x. x y) ((\x. x) y)",
    r"(\x. y x) ((\x. x) y)",
)

SAMPLES = tuple(parse_term(t) for t in SAMPLE_TEXTS)
