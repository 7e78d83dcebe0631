#!/usr/bin/env python3
"""Stage the canonical 512x512 grayscale test images under data/.

The reference-image acceptance check (criterion 6) compares denoising PSNR
against published bands for the classic "barbara" and "house" test images.
Those scans are not redistributable with this repository, so the check skips
itself until this script (or a manual copy) places them at:

    data/barbara.pgm   512x512, 8-bit grayscale, PGM (P2 or P5)
    data/house.pgm     512x512, 8-bit grayscale, PGM (P2 or P5)

Usage:
    python3 tools/fetch_test_images.py            # try the known mirrors
    python3 tools/fetch_test_images.py --from DIR # convert local copies

Any common raster format works as input when Pillow is installed; bare PGM
files are handled without extra dependencies. Images that are not 512x512
are rejected rather than resized: the published numbers assume the canonical
scans. The classic "house" scan is 256x256; the 512x512 variant required
here ships with the USC-SIPI miscellaneous volume (often named house512).
"""

import argparse
import io
import shutil
import sys
import urllib.request
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"

# Historically stable hosts for the classic test images. Mirrors come and
# go; --from is the dependable path when none of these respond.
MIRRORS = {
    "barbara": [
        "https://www.math.purdue.edu/~lucier/692/barbara.png",
        "http://www.hlevkin.com/hlevkin/TestImages/barbara.bmp",
    ],
    "house": [
        "http://www.hlevkin.com/hlevkin/TestImages/house512.bmp",
    ],
}


def decode_image(payload: bytes, origin: str):
    """Returns (width, height, row-major 8-bit samples) or raises ValueError."""
    try:
        from PIL import Image  # type: ignore
    except ImportError:
        Image = None

    if Image is not None:
        img = Image.open(io.BytesIO(payload)).convert("L")
        return img.width, img.height, img.tobytes()

    # No Pillow: accept binary PGM with maxval 255 and nothing else.
    if not payload.startswith(b"P5"):
        raise ValueError(
            f"{origin}: Pillow is not installed, so only P5 PGM input is supported "
            "(pip install Pillow)"
        )
    fields = []
    pos = 2
    while len(fields) < 3:
        while pos < len(payload) and payload[pos : pos + 1].isspace():
            pos += 1
        if payload[pos : pos + 1] == b"#":
            while pos < len(payload) and payload[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(payload) and not payload[pos : pos + 1].isspace():
            pos += 1
        fields.append(int(payload[start:pos]))
    width, height, maxval = fields
    if maxval != 255:
        raise ValueError(f"{origin}: expected maxval 255, got {maxval}")
    raster = payload[pos + 1 : pos + 1 + width * height]
    if len(raster) != width * height:
        raise ValueError(f"{origin}: truncated raster")
    return width, height, raster


def write_pgm(path: Path, width: int, height: int, samples: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as out:
        out.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        out.write(samples)


def stage(name: str, payload: bytes, origin: str) -> bool:
    try:
        width, height, samples = decode_image(payload, origin)
    except Exception as error:
        print(f"  {origin}: {error}")
        return False
    if (width, height) != (512, 512):
        print(f"  {origin}: {width}x{height}, need 512x512 - rejected (no resizing)")
        return False
    write_pgm(DATA_DIR / f"{name}.pgm", width, height, samples)
    print(f"  staged data/{name}.pgm from {origin}")
    return True


def try_mirrors(name: str) -> bool:
    for url in MIRRORS[name]:
        print(f"  trying {url}")
        try:
            with urllib.request.urlopen(url, timeout=30) as response:
                payload = response.read()
        except Exception as error:
            print(f"    unreachable: {error}")
            continue
        if stage(name, payload, url):
            return True
    return False


def try_local(name: str, source_dir: Path) -> bool:
    candidates = sorted(
        p
        for p in source_dir.iterdir()
        if p.is_file() and p.stem.lower().startswith(name)
    )
    for candidate in candidates:
        if stage(name, candidate.read_bytes(), str(candidate)):
            return True
    if not candidates:
        print(f"  no file named {name}.* in {source_dir}")
    return False


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--from",
        dest="source",
        metavar="DIR",
        help="convert local copies (barbara.*, house.*) instead of downloading",
    )
    args = parser.parse_args()

    ok = True
    for name in ("barbara", "house"):
        target = DATA_DIR / f"{name}.pgm"
        print(f"{name}:")
        if target.exists():
            print(f"  data/{name}.pgm already staged")
            continue
        if args.source:
            ok &= try_local(name, Path(args.source))
        else:
            ok &= try_mirrors(name)

    if not ok:
        print(
            "\nsome images are still missing; place 512x512 grayscale scans at "
            "data/barbara.pgm and data/house.pgm manually (any PGM flavor works)"
        )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
