# superhc/utils/products_dir/sign_convention.py
# In[1]: Imports
from dataclasses import dataclass

DEGREE_SOURCES = ("homological_degree", "parity", "total")


# In[2]: Sign conventions
@dataclass(frozen=True)
class SignConvention:
    """
    Where the degree in (−1)^{deg} signs comes from, and whether shuffles carry
    Koszul factors for odd entries.
    """

    degree_sign_source: str = "homological_degree"
    koszul_in_shuffle: bool = True

    def __post_init__(self):
        if self.degree_sign_source not in DEGREE_SOURCES:
            raise ValueError(
                f"Unknown degree sign source '{self.degree_sign_source}' "
                f"(expected one of {DEGREE_SOURCES})"
            )

    def degree(self, homological: int, parity: int) -> int:
        if self.degree_sign_source == "homological_degree":
            return homological
        if self.degree_sign_source == "parity":
            return parity
        return homological + parity

    @property
    def name(self) -> str:
        prefix = "koszul" if self.koszul_in_shuffle else "plain"
        return f"{prefix}-{self.degree_sign_source.split('_')[0]}"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "SignConvention":
        """Parse names like 'koszul-homological', 'plain-parity' or 'total'."""
        token = text.strip().lower()
        koszul = True
        if "-" in token:
            prefix, token = token.split("-", 1)
            if prefix not in {"koszul", "plain"}:
                raise ValueError(f"Unknown convention prefix '{prefix}'")
            koszul = prefix == "koszul"
        for source in DEGREE_SOURCES:
            if source.startswith(token):
                return cls(source, koszul)
        raise ValueError(f"Unknown sign convention '{text}'")


DEFAULT_CONVENTION = SignConvention()

# resolver order
CONVENTIONS = tuple(
    SignConvention(source, koszul) for koszul in (True, False) for source in DEGREE_SOURCES
)
