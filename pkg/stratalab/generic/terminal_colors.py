# This work is licensed under the GNU GPLv3.

"""ANSI colouring with a compact inline markup.

"[c]text[-+r]more" renders "text" in cyan and "more" in dim bright red. A
left square bracket in text is written as "[[".
"""

import re

class ColorString:
    """Color string representation with ANSI output."""

    colors = {"black": 30, "red": 31, "green": 32, "yellow": 33, "blue": 34,
              "magenta": 35, "cyan": 36, "white": 37}
    attributes = {"reset": 0, "bold": 1, "dim": 2, "underline": 4,
                  "blink": 5, "reverse": 7}
    abbreviations = {
        # achromatic colors
        "B": "black",
        "G": "bright black",
        "W": "white",

        # chromatic colors
        "r": "red",
        "g": "green",
        "b": "blue",
        "c": "cyan",
        "m": "magenta",
        "y": "yellow",

        # operators
        "+": "bright",
        "-": "dim",
        "*": "bold",
        "¤": "blink",
        "~": "reverse",
        "_": "underline",
        }

    def __init__(self, markup):
        """Construct from inline markup or a list of (expression, text)."""
        if isinstance(markup, str):
            self.parts = [
                (" ".join(self.abbreviations[c] for c in code),
                 text.replace("[[", "["))
                for code, text in re.findall(
                    r"\[([^\]]*)\]((?:[^\[]*(?:\[\[)?)*)", markup)]
        else:
            self.parts = list(markup)

    def __str__(self):
        """Omit colors and convert to a string."""
        return "".join(text for _, text in self.parts)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.parts})"

    def _codes(self, expression):
        """Translate e.g. "dim bright red" to SGR parameters."""
        codes = []
        bright = False
        for word in expression.split():
            if word == "bright":
                bright = True
            elif word in self.attributes:
                codes.append(self.attributes[word])
            elif word in self.colors:
                codes.append(self.colors[word] + (60 if bright else 0))
                bright = False
        return codes or [self.attributes["reset"]]

    def ansi(self):
        """Output with SGR ANSI escape sequences."""
        return "".join(f"\x1b[{';'.join(map(str, self._codes(expression)))}m"
                       f"{text}\x1b[0m"
                       for expression, text in self.parts)
