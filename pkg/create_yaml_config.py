# create_yaml_config.py
from abstract.product.concrete_products_common import DEFAULTS, DEFAULT_SETTINGS_PATH
from pathlib import Path
from typing import Optional
import argparse
import yaml


def write_default_settings(output: Path = DEFAULT_SETTINGS_PATH, overwrite: bool = False) -> Path:
    """Dump the built-in settings as a config.yaml that the app reads back unchanged."""
    output = Path(output)
    if output.exists() and not overwrite:
        raise FileExistsError(f"{output} already exists (use --force to replace it)")

    with output.open("w", encoding="utf-8") as f:
        yaml.safe_dump(DEFAULTS, f, sort_keys=False, default_flow_style=False)
    return output


def main(argv: Optional[list] = None) -> None:
    parser = argparse.ArgumentParser(description="Write the default photon-fusion settings file.")
    parser.add_argument("--output", type=Path, default=DEFAULT_SETTINGS_PATH)
    parser.add_argument("--force", action="store_true")
    args = parser.parse_args(argv)
    try:
        path = write_default_settings(args.output, overwrite=args.force)
    except FileExistsError as e:
        raise SystemExit(str(e))
    print(f"Created '{path}' with sections: {', '.join(DEFAULTS)}.")


if __name__ == "__main__":
    main()
