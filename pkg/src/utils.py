import os
import json
import logging

import click
import yaml

from dotenv import dotenv_values

PROJECT_DIR = os.path.join(os.path.dirname(__file__), os.pardir)
config = dotenv_values(os.path.join(PROJECT_DIR, ".env"))

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__), "data", "configs", "default.yaml")


def validate_yaml_or_json(ctx, param, value):
    if value is None:
        return
    try:
        return read_yaml(value)
    except OSError:
        try:
            return json.loads(value)
        except json.decoder.JSONDecodeError:
            raise click.BadParameter('config needs to be either a json string or a path to a config .yaml')


def read_yaml(path):
    with open(path, 'r') as stream:
        return yaml.safe_load(stream)


def merge_config(base, override):
    """Recursively merges `override` into a copy of `base`."""
    merged = dict(base)
    for k, v in (override or {}).items():
        if isinstance(v, dict) and isinstance(merged.get(k), dict):
            merged[k] = merge_config(merged[k], v)
        else:
            merged[k] = v
    return merged


def load_config(override=None, path=DEFAULT_CONFIG_PATH):
    return merge_config(read_yaml(path), override)


def get_env(name, default=None):
    """Environment first, then the project's .env file."""
    return os.environ.get(name, config.get(name, default))


def to_json(datum):
    return json.dumps(datum, separators=(",", ":"), ensure_ascii=False)


def to_jsonl(data):
    return "\n".join(to_json(datum) for datum in data)


def get_logger(name):
    logger = logging.getLogger(name)
    logging.basicConfig(
        format="%(asctime)s - %(levelname)s - %(name)s -   %(message)s",
        datefmt="%m/%d/%Y %H:%M:%S",
        level=get_env("TSG_LOG_LEVEL", "WARNING").upper()
    )
    return logger
