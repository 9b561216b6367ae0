import os
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from power_graph_coloring.exceptions import ParameterOutOfRange

ENV_PREFIX = "POWER_GRAPH_"


class Limits(BaseModel):
    """Tunable limits shared by the engine and the CLI.

    Values resolve as CLI flag > environment variable > default. Every field can be
    overridden through ``POWER_GRAPH_<FIELD NAME IN UPPER CASE>``, e.g.
    ``POWER_GRAPH_EXACT_CHI_LIMIT=80``.
    """

    model_config = ConfigDict(frozen=True)

    exact_chi_limit: int = Field(default=64, ge=1)
    max_clique_limit: int = Field(default=256, ge=1)
    brute_force_limit: int = Field(default=8, ge=1, le=10)
    window_w: int = Field(default=50, ge=1)
    window_e: int = Field(default=24, ge=1)
    max_magma_size: int = Field(default=256, ge=1)
    corpus_seed: int = 20240917
    workers: int = Field(default=1, ge=1)

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None, **overrides: int | None) -> Self:
        """Build limits from the environment, then apply explicit (non-None) overrides.

        Args:
            environ: Mapping to read instead of ``os.environ`` (tests)
            **overrides: Field values that win over the environment, ``None`` is ignored

        Returns:
            The resolved limits

        Raises:
            ParameterOutOfRange: If a value is not an integer or violates a field bound
        """
        environ = dict(os.environ) if environ is None else environ
        values: dict[str, int] = {}
        for name in cls.model_fields:
            raw = environ.get(f"{ENV_PREFIX}{name.upper()}")
            if raw is None:
                continue
            try:
                values[name] = int(raw)
            except ValueError:
                raise ParameterOutOfRange(f"{ENV_PREFIX}{name.upper()}", raw, "not an integer") from None
        values.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(**values)
        except ValidationError as exc:
            error = exc.errors()[0]
            field = str(error["loc"][0]) if error["loc"] else "limits"
            raise ParameterOutOfRange(field, values.get(field), error["msg"]) from exc
