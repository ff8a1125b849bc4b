"""Bit-exact packet codec.

Every packet is a fixed-width big-endian record:

    header, 4 bytes:
        byte 0   low nibble: 2-bit kind tag, flag1 bit, flag2 bit
        byte 1   sender node id (unsigned 8-bit)
        byte 2   hop count (unsigned 8-bit, meaningful for flood sources)
        byte 3   reserved, zero
    body:
        x, y     two unsigned 16-bit fixed-point field units (1/16 step)
        energy   unsigned 32-bit, 0xFFFFFFFF encodes the base's infinite supply
        message  zero-padded text, 12 bytes for query/ack, 52 for source

Totals: query/ack 24 bytes, source 64 bytes.  The flags are readable
from the first four bytes alone, so a receiver can dispatch on them
without decoding the body.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from enum import IntEnum


HEADER_SIZE = 4
QUERY_ACK_SIZE = 24
SOURCE_SIZE = 64
_SHORT_MSG_CAP = QUERY_ACK_SIZE - HEADER_SIZE - 8   # 12
_LONG_MSG_CAP = SOURCE_SIZE - HEADER_SIZE - 8       # 52

ENERGY_INF_WIRE = 0xFFFFFFFF
RESET_MESSAGE = "RESET"

_COORD_STEP = 16  # fixed-point denominator for 16-bit coordinates


class PacketError(ValueError):
    """Raised on malformed packets or unencodable field values."""


class PacketKind(IntEnum):
    QUERY = 0
    ACK = 1
    SOURCE = 2


@dataclass(frozen=True)
class Flags:
    """flag1 marks an irregular alarm, flag2 a devastating one.

    flag2 never appears without flag1; a devastating situation is a
    special case of an irregular one.
    """

    flag1: bool = False
    flag2: bool = False

    def __post_init__(self):
        if self.flag2 and not self.flag1:
            raise PacketError("flag2 set without flag1")


@dataclass(frozen=True)
class Packet:
    kind: PacketKind
    flags: Flags
    src: int
    hop_count: int
    loc: tuple[float, float]
    energy: float  # non-negative int-valued, or math.inf for the base
    message: str = ""

    @property
    def size(self) -> int:
        return SOURCE_SIZE if self.kind == PacketKind.SOURCE else QUERY_ACK_SIZE


def _message_cap(kind: PacketKind) -> int:
    return _LONG_MSG_CAP if kind == PacketKind.SOURCE else _SHORT_MSG_CAP


def _encode_coord(v: float) -> int:
    scaled = v * _COORD_STEP
    iv = round(scaled)
    if iv != scaled:
        raise PacketError(f"coordinate {v} not representable in 1/{_COORD_STEP} units")
    if not 0 <= iv <= 0xFFFF:
        raise PacketError(f"coordinate {v} out of the encodable range")
    return iv


def _encode_energy(e: float) -> int:
    if e == math.inf:
        return ENERGY_INF_WIRE
    if not isinstance(e, int) or isinstance(e, bool):
        raise PacketError(f"finite energy must be an int, got {e!r}")
    if not 0 <= e < ENERGY_INF_WIRE:
        raise PacketError(f"energy {e} out of the encodable range")
    return e


def encode(p: Packet) -> bytes:
    """Serialize a packet; the result is 24 or 64 bytes by kind."""
    if not 0 <= p.src <= 0xFF:
        raise PacketError(f"node id {p.src} does not fit the 8-bit src field")
    if not 0 <= p.hop_count <= 0xFF:
        raise PacketError(f"hop count {p.hop_count} does not fit 8 bits")
    msg = p.message.encode("utf-8")
    cap = _message_cap(p.kind)
    if len(msg) > cap:
        raise PacketError(f"message of {len(msg)} bytes exceeds the {cap}-byte field")
    if b"\x00" in msg:
        raise PacketError("message must not contain NUL bytes")
    b0 = (int(p.kind) << 2) | (int(p.flags.flag1) << 1) | int(p.flags.flag2)
    header = struct.pack(">BBBB", b0, p.src, p.hop_count, 0)
    body = struct.pack(
        ">HHI",
        _encode_coord(p.loc[0]),
        _encode_coord(p.loc[1]),
        _encode_energy(p.energy),
    )
    return header + body + msg.ljust(cap, b"\x00")


def _parse_byte0(b0: int) -> tuple[PacketKind, Flags]:
    if b0 & 0xF0:
        raise PacketError(f"reserved header bits set in byte 0 ({b0:#04x})")
    tag = (b0 >> 2) & 0b11
    try:
        kind = PacketKind(tag)
    except ValueError:
        raise PacketError(f"unknown packet kind tag {tag}") from None
    flag1 = bool(b0 & 0b10)
    flag2 = bool(b0 & 0b01)
    if flag2 and not flag1:
        raise PacketError("flag2 set without flag1 in header")
    return kind, Flags(flag1, flag2)


def peek_flags(data: bytes) -> tuple[PacketKind, Flags]:
    """Read kind and flags from the first 4 bytes without touching the body."""
    if len(data) < HEADER_SIZE:
        raise PacketError(f"need at least {HEADER_SIZE} bytes, got {len(data)}")
    return _parse_byte0(data[0])


def decode(data: bytes) -> Packet:
    """Parse wire bytes back into a Packet; inverse of encode for valid input."""
    kind, flags = peek_flags(data)
    expected = SOURCE_SIZE if kind == PacketKind.SOURCE else QUERY_ACK_SIZE
    if len(data) != expected:
        raise PacketError(f"{kind.name} packet must be {expected} bytes, got {len(data)}")
    src = data[1]
    hop = data[2]
    x16, y16, e32 = struct.unpack(">HHI", data[4:12])
    energy = math.inf if e32 == ENERGY_INF_WIRE else e32
    message = data[12:].rstrip(b"\x00").decode("utf-8")
    return Packet(
        kind=kind,
        flags=flags,
        src=src,
        hop_count=hop,
        loc=(x16 / _COORD_STEP, y16 / _COORD_STEP),
        energy=energy,
        message=message,
    )


def _fmt_coord(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else str(v)


def affected_message(node_id: int, loc: tuple[float, float]) -> str:
    """Alarm text naming the originally affected node and its location."""
    return f"Affected NODE is ->NODE{node_id} At Location ({_fmt_coord(loc[0])} {_fmt_coord(loc[1])})"


def disconnect_message(node_id: int) -> str:
    return f"NODE {node_id} DISCONNECTED"


def make_query(src: int, flag1: bool = False, flag2: bool = False,
               loc: tuple[float, float] = (0.0, 0.0), energy: float = 0) -> Packet:
    return Packet(
        kind=PacketKind.QUERY,
        flags=Flags(flag1, flag2),
        src=src,
        hop_count=0,
        loc=loc,
        energy=energy,
    )


def make_ack(src: int, energy: float, loc: tuple[float, float], message: str = "") -> Packet:
    return Packet(
        kind=PacketKind.ACK,
        flags=Flags(),
        src=src,
        hop_count=0,
        loc=loc,
        energy=energy,
        message=message,
    )


def make_source(src: int, loc: tuple[float, float], energy: float, message: str,
                hop_count: int = 0, devastating: bool = False) -> Packet:
    return Packet(
        kind=PacketKind.SOURCE,
        flags=Flags(flag1=True, flag2=devastating),
        src=src,
        hop_count=hop_count,
        loc=loc,
        energy=energy,
        message=message,
    )
