"""Build the integration fixture for the editor tests: a tiny randomly
initialized checkpoint plus two source images, all in the given directory."""

import sys
from pathlib import Path

from hisd.checkpoint import save_checkpoint
from hisd.networks import WidthConfig, init_bundle
from hisd.synthbench import Factors, render
from hisd import imageio
from hisd.hierarchy import load_schema

SCHEMA = """
tags:
  - name: hat
    attributes:
      - {name: with, when: [Has_Hat=1]}
      - {name: without, when: [Has_Hat=-1]}
    conditions: [Is_Square, Is_Light]
  - name: frame
    attributes:
      - {name: red, when: [Frame_Red=1]}
      - {name: green, when: [Frame_Green=1]}
      - {name: blue, when: [Frame_Blue=1]}
    conditions: [Is_Square, Is_Light]
"""


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    widths = WidthConfig(
        image_size=32, base=4, style_dim=16, latent_dim=8,
        translator_blocks=2, translator_width=8,
        extractor_base=4, extractor_max=16, mapper_hidden=16,
    )
    bundle = init_bundle(load_schema(SCHEMA), widths, seed=3)
    save_checkpoint(out / "ckpt_00000000.npz", bundle)
    a = Factors(hat=True, hat_hue=0.2, hat_height=5, frame=0, frame_thickness=2,
                square=True, light=False, jitter=(0, 0))
    b = Factors(hat=False, hat_hue=0.0, hat_height=3, frame=2, frame_thickness=3,
                square=False, light=True, jitter=(1, -1))
    imageio.write_image(out / "source.png", render(a))
    imageio.write_image(out / "reference.png", render(b))
    print("fixture ready")


if __name__ == "__main__":
    main(Path(sys.argv[1]))
