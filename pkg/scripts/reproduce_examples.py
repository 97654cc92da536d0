"""Rebuild the worked examples and print their sets and checks."""
from partition_crt.arith import CrtParams
from partition_crt.congruences import (CongruenceClaim, check_claim,
                                       convolution_check, transfer_crt)
from partition_crt.identities import (CrtIdentityParams, build_crt, build_preset,
                                      finite_complement, verify_polynomial)
from partition_crt.partitions import verify_counts


def main():
    inst = build_crt(CrtIdentityParams(CrtParams((2, 3, 5), (1, 1, 1)), k=1, l=1))
    print("m=(2,3,5), a=(1,1,1), k=1, l=1")
    print("  A =", sorted(inst.A.core))
    print("  B residues mod %d: %s" % inst.B.residues())
    print("  polynomial identity:", verify_polynomial(inst, 100))
    print("  counts to 300 (oracle to 40):", verify_counts(inst, 300, 40).passed)
    claim = transfer_crt(inst, 3, CongruenceClaim(5, 4, 5))
    print(f"  {claim} for n <= 100:", check_claim(claim, 100).passed)
    print("  convolution through factor 3, n <= 60:", convolution_check(inst, 3, 60).passed)

    inst = build_crt(CrtIdentityParams(CrtParams((2, 3), (1, 1)), k=1, l=None, r=(3, 4)))
    print("m=(2,3), a=(1,1), k=1, l=inf, r=(3,4)")
    print("  excluded multiplicities:", sorted(finite_complement(inst)))
    print("  B residues mod %d: %s" % inst.B.residues())
    print("  counts to 300 (oracle to 40):", verify_counts(inst, 300, 40).passed)

    for name, args in [("euler", ()), ("glaisher", (3,)), ("macmahon", ()),
                       ("andrews", (2,)), ("subbarao", (3, 1)), ("nm", (2, 1, 1, 3))]:
        inst = build_preset(name, *args)
        print(f"{name}{args}: counts to 300 agree:", verify_counts(inst, 300, 40).passed)


if __name__ == "__main__":
    main()
