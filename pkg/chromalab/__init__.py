"""chromalab: coloring (P7, C4, C5)-free graphs within ceil(11ω/9) colors."""
