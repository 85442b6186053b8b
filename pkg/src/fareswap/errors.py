"""Exception types raised by loaders, builders and the arbitrage engine."""


class FareswapError(Exception):
    """Base class for every data or validation error in this package."""


class MalformedCsv(FareswapError):
    """A CSV file does not have the expected header or row shape."""


class InvalidStationId(FareswapError):
    """Station id is not a lowercase slug of [a-z0-9-]."""


class DuplicateStation(FareswapError):
    """The same station id appears twice where ids must be unique."""


class UnknownStationInRoute(FareswapError):
    """A route references a station id that was never declared."""


class DuplicateRoute(FareswapError):
    """Two routes share a name, which would make lookups ambiguous."""


class GraphNotTree(FareswapError):
    """The union of route edges is cyclic or disconnected."""


class UnknownStation(FareswapError):
    """A station id is not part of the network (or fare table) at hand."""


class UnknownRoute(FareswapError):
    """No route with the requested name exists in the network."""


class MalformedMoney(FareswapError):
    """A monetary string is not a non-negative amount with <= 2 decimals."""


class MissingPair(FareswapError):
    """The fare table has no value for some unordered station pair."""


class AsymmetricFare(FareswapError):
    """Mirror cells of the fare matrix disagree."""


class ZoneOnNonLineNetwork(FareswapError):
    """Zone surcharges only make sense on a single-line network."""


class InvalidZoneInterval(FareswapError):
    """A zone's station interval falls outside the line or is reversed."""


class InstanceTooLarge(FareswapError):
    """The literal oracle refuses networks past its size cap."""


class ProfileTooShort(FareswapError):
    """Second differences need at least three profile points."""


class OriginNotOnRoute(FareswapError):
    """The profile origin is not a stop of the named route."""
