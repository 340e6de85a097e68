from brute_oracle import *
import sys
g = gallery()
n = sys.argv[1]; lo = F(sys.argv[2]); hi = F(sys.argv[3]); q = int(sys.argv[4]); pad = int(sys.argv[5])
s = g[n]
s2 = S(n, s.dim, s.Pp, s.Psp, s.dom, s.tors, lo=lo, hi=hi, q=q, pad=pad)
print(n, len(s2.Q), len(s2.W), qr_laws(s2))
