#!/usr/bin/env python3
"""Regenerate src/wavelet_tables.cpp from the PyWavelets coefficient tables.

Only the analysis and synthesis lowpass filters are stored; highpass filters
are derived at catalog construction time. dmey is not taken from here, it is
built from the Meyer frequency response in meyer.cpp.

    pip install PyWavelets && python3 tools/gen_wavelet_tables.py > src/wavelet_tables.cpp
"""
import pywt

ORTHO = (["haar"] + [f"db{i}" for i in range(2, 11)]
         + [f"sym{i}" for i in range(2, 11)] + ["sym20"]
         + [f"coif{i}" for i in range(1, 6)])
BIOR_ORDERS = ["1.1", "1.3", "1.5", "2.2", "2.4", "2.6", "2.8", "3.1", "3.3",
               "3.5", "3.7", "3.9", "4.4", "5.5", "6.8"]
BIOR = [f"bior{o}" for o in BIOR_ORDERS] + [f"rbio{o}" for o in BIOR_ORDERS]


def fmt(values):
    items = [repr(float(v)) for v in values]
    rows = [", ".join(items[i:i + 3]) for i in range(0, len(items), 3)]
    return "\n        " + ",\n        ".join(rows) + "\n      "


def main():
    print("// Generated by tools/gen_wavelet_tables.py. Do not edit by hand.")
    print('#include "wavelet_tables.hpp"\n')
    print("namespace eegswt::detail {\n")
    print("const std::vector<LowpassTable>& lowpass_tables() {")
    print("  static const std::vector<LowpassTable> tables = {")
    for name in ORTHO + BIOR:
        w = pywt.Wavelet(name)
        rec = "{}" if name in ORTHO else "{" + fmt(w.rec_lo) + "}"
        print(f'      {{"{name}",\n       {{{fmt(w.dec_lo)}}},\n       {rec}}},')
    print("  };")
    print("  return tables;")
    print("}\n")
    print("}  // namespace eegswt::detail")


if __name__ == "__main__":
    main()
