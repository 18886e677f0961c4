#!/usr/bin/env python3
"""Regenerates data/camera512.pgm.

The benchmark image is the classic 512x512 8-bit "camera" photograph bundled
with scikit-image (CC0 / public domain), clipped to [1, 254] so that no clean
pixel aliases the salt (255) or pepper (0) impulse values the decision filters
key on. The file is written as binary PGM (P5, maxval 255).
"""

import numpy as np
import skimage.data


def main() -> None:
    img = np.clip(skimage.data.camera(), 1, 254).astype(np.uint8)
    assert img.shape == (512, 512)
    with open("camera512.pgm", "wb") as f:
        f.write(b"P5\n512 512\n255\n")
        f.write(img.tobytes())
    print(f"camera512.pgm written (mean {img.mean():.2f}, "
          f"min {img.min()}, max {img.max()})")


if __name__ == "__main__":
    main()
