"""Exception types raised across the package."""


class LeafCostError(Exception):
    """Base class for all errors raised by this package."""


class MalformedGraph6(LeafCostError, ValueError):
    pass


class IndexOutOfRange(LeafCostError, IndexError):
    pass


class NotASeparator(LeafCostError, ValueError):
    pass


class TooSmall(LeafCostError, ValueError):
    pass


class TooLarge(LeafCostError, ValueError):
    pass


class Disconnected(LeafCostError, ValueError):
    pass


class NotTwoConnected(LeafCostError, ValueError):
    pass


class LabelSpaceMismatch(LeafCostError, ValueError):
    pass


class NotLeafGuaranteed(LeafCostError, ValueError):
    pass


class NotTwoLeafStable(LeafCostError, ValueError):
    pass


class PreconditionViolated(LeafCostError, ValueError):
    pass


class MissingRoles(LeafCostError, KeyError):
    pass


class NotAFragment(LeafCostError, ValueError):
    pass


class MTooSmall(TooSmall):
    pass


class KTooSmall(TooSmall):
    pass
