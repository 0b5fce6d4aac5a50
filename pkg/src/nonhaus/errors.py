"""Exception hierarchy.  Every error carries a stable ``code`` string."""


class NonHausError(Exception):
    code = "E_GENERIC"
    exit_status = 1

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def as_dict(self) -> dict:
        out = {"error": self.code, "message": str(self)}
        if self.details:
            out["details"] = {k: str(v) for k, v in self.details.items()}
        return out


class InputError(NonHausError):
    """The input was rejected; exit status 1."""


class ParseError(InputError):
    code = "E_PARSE"


class NotTame(InputError):
    code = "E_NOT_TAME"


class NotInjective(InputError):
    code = "E_NOT_INJECTIVE"


class NotContinuous(InputError):
    code = "E_NOT_CONTINUOUS"


class NotApplicable(InputError):
    code = "E_NOT_APPLICABLE"


class InternalError(NonHausError):
    """An invariant that must hold for accepted inputs was violated; exit status 2."""

    code = "E_INTERNAL"
    exit_status = 2
