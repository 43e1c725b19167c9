""" Wire format.

A frame is a 4-byte big-endian payload length followed by the payload, one
serialized value. A serialized value is a tag byte and a body:

====  =====  ==============================================
tag   kind   body
====  =====  ==============================================
0x00  Unit   empty
0x01  Bool   one byte, 0 or 1
0x02  Int    8 bytes, big-endian two's complement
0x03  Str    4-byte big-endian byte length, then UTF-8
0x04  Pair   two serialized values
0x05  List   4-byte big-endian count, then the elements
====  =====  ==============================================

Pairs and lists nest at most ``MAX_NESTING`` deep.
"""

import struct

from choreopy.exceptions import DecodeError, FrameTooLarge
from choreopy.local.value import UNIT, Bool, Int, List, Pair, Str, Unit

HEADER = struct.Struct('!I')
INT64 = struct.Struct('>q')
LENGTH = struct.Struct('>I')

MAX_FRAME = 16 * 1024 * 1024
MAX_NESTING = 256

TAG_UNIT = 0x00
TAG_BOOL = 0x01
TAG_INT = 0x02
TAG_STR = 0x03
TAG_PAIR = 0x04
TAG_LIST = 0x05


def _encode_into(buf, v):
    pending = [(v, 0)]
    while pending:
        v, depth = pending.pop()
        if isinstance(v, Unit):
            buf.append(TAG_UNIT)
        elif isinstance(v, Bool):
            buf.append(TAG_BOOL)
            buf.append(1 if v.b else 0)
        elif isinstance(v, Int):
            buf.append(TAG_INT)
            buf += INT64.pack(v.i)
        elif isinstance(v, Str):
            data = v.s.encode('utf-8')
            buf.append(TAG_STR)
            buf += LENGTH.pack(len(data))
            buf += data
        elif isinstance(v, (Pair, List)):
            if depth == MAX_NESTING:
                raise ValueError(f"value nested deeper than {MAX_NESTING}")
            if isinstance(v, Pair):
                buf.append(TAG_PAIR)
                children = (v.fst, v.snd)
            else:
                buf.append(TAG_LIST)
                buf += LENGTH.pack(len(v.items))
                children = v.items
            pending.extend((c, depth + 1) for c in reversed(children))
        else:
            raise TypeError(f"cannot serialize {v!r}")


def encode(v):
    """Serialize a Value

    Raises
    ------
    ValueError
        If pairs and lists nest deeper than ``MAX_NESTING``.
    """

    buf = bytearray()
    _encode_into(buf, v)
    return bytes(buf)


def _take(data, pos, n):
    if pos + n > len(data):
        raise DecodeError(f"truncated value: needed {n} byte(s) at offset "
                          f"{pos}")
    return data[pos:pos + n], pos + n


def _decode_scalar(tag, data, pos):
    if tag == TAG_UNIT:
        return UNIT, pos
    if tag == TAG_BOOL:
        body, pos = _take(data, pos, 1)
        if body[0] not in (0, 1):
            raise DecodeError(f"invalid boolean byte {body[0]:#04x}")
        return Bool(body[0] == 1), pos
    if tag == TAG_INT:
        body, pos = _take(data, pos, INT64.size)
        return Int(INT64.unpack(body)[0]), pos
    if tag == TAG_STR:
        body, pos = _take(data, pos, LENGTH.size)
        text, pos = _take(data, pos, LENGTH.unpack(body)[0])
        try:
            return Str(text.decode('utf-8')), pos
        except UnicodeDecodeError as err:
            raise DecodeError(f"invalid UTF-8 in string: {err}") from None
    raise DecodeError(f"unknown tag {tag:#04x}")


def _decode_at(data, pos):
    # open pairs and lists as [tag, count, items]
    open_ = []
    while True:
        tag, pos = _take(data, pos, 1)
        tag = tag[0]
        if tag in (TAG_PAIR, TAG_LIST):
            if len(open_) == MAX_NESTING:
                raise DecodeError(f"value nested deeper than {MAX_NESTING}")
            if tag == TAG_PAIR:
                count = 2
            else:
                body, pos = _take(data, pos, LENGTH.size)
                count = LENGTH.unpack(body)[0]
            if count:
                open_.append([tag, count, []])
                continue
            v = List(())
        else:
            v, pos = _decode_scalar(tag, data, pos)

        # close every container this value completes
        while open_:
            tag, count, items = open_[-1]
            items.append(v)
            if len(items) < count:
                break
            open_.pop()
            v = Pair(*items) if tag == TAG_PAIR else List(tuple(items))
        else:
            return v, pos


def decode(data):
    """Deserialize exactly one Value

    Raises
    ------
    DecodeError
        On an unknown tag, truncated input, nesting deeper than
        ``MAX_NESTING`` or trailing bytes.
    """

    data = bytes(data)
    v, pos = _decode_at(data, 0)
    if pos != len(data):
        raise DecodeError(f"{len(data) - pos} trailing byte(s)")
    return v


def frame(payload):
    """Prefix a payload with its length"""
    if len(payload) > MAX_FRAME:
        raise FrameTooLarge(len(payload), MAX_FRAME)
    return HEADER.pack(len(payload)) + payload


def unframe(data):
    """Payload of a single complete frame"""
    header, pos = _take(bytes(data), 0, HEADER.size)
    size = HEADER.unpack(header)[0]
    if size > MAX_FRAME:
        raise FrameTooLarge(size, MAX_FRAME)
    if len(data) - pos != size:
        raise DecodeError(f"frame announces {size} byte(s), carries "
                          f"{len(data) - pos}")
    return bytes(data[pos:])


def recv_exact(sock, n):
    """Receive exactly ``n`` bytes, or None if the peer closed before the
    first one"""

    buf = b''
    while len(buf) < n:
        chunk = sock.recv(n - len(buf))
        if not chunk:
            if not buf:
                return None
            raise ConnectionError("peer closed in the middle of a frame")
        buf += chunk
    return buf


def write_value(sock, v):
    sock.sendall(frame(encode(v)))


def read_value(sock):
    """Read one framed value; None when the peer closed cleanly"""

    header = recv_exact(sock, HEADER.size)
    if header is None:
        return None
    size = HEADER.unpack(header)[0]
    if size > MAX_FRAME:
        raise FrameTooLarge(size, MAX_FRAME)
    payload = recv_exact(sock, size) if size else b''
    if payload is None:
        raise ConnectionError("peer closed in the middle of a frame")
    return decode(payload)
