from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from src.app.perturbation.domain.functional_polynomial import FunctionalPolynomial
from src.app.perturbation.domain.repositories import PolynomialRepository
from src.app.perturbation.domain.schemas import PolynomialDocument, TermRecord
from src.app.utils.errors import SerializationError
from src.app.utils.logger import get_logger

logger = get_logger(__name__)


class JsonPolynomialRepository(PolynomialRepository):
    """
    Functional polynomials as indented JSON, terms sorted, for golden-file comparisons.
    """

    def __init__(self, indent: int = 2):
        self.indent = indent

    def save(
        self,
        polynomial: FunctionalPolynomial,
        path: Union[str, Path],
        node_times: Optional[Sequence[float]] = None,
    ) -> Path:
        path = Path(path)
        document = PolynomialDocument(
            max_degree=polynomial.max_degree,
            node_times=[float(t) for t in (node_times if node_times is not None else ())],
            terms=[TermRecord(**row) for row in polynomial.to_rows()],
        )
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(document.model_dump_json(indent=self.indent) + "\n")
        except OSError as e:
            logger.error(f"IOError writing {path}: {e}")
            raise SerializationError(f"failed to write {path}: {e}") from e
        logger.debug(f"Wrote {len(polynomial)} terms to {path}")
        return path

    def load(self, path: Union[str, Path]) -> Tuple[FunctionalPolynomial, Tuple[float, ...]]:
        path = Path(path)
        try:
            document = PolynomialDocument.model_validate_json(path.read_text())
        except OSError as e:
            raise SerializationError(f"failed to read {path}: {e}") from e
        except ValidationError as e:
            raise SerializationError(f"malformed polynomial document {path}: {e}") from e
        polynomial = FunctionalPolynomial(document.max_degree)
        for term in document.terms:
            polynomial.add_term(term.hbar_power, term.insertions, complex(term.re, term.im))
        return polynomial, tuple(document.node_times)
