//! Automorphisms, self-dualities and quotients of L(B) and L(GR).

use polycyclic::symmetry::{
    are_isomorphic, automorphisms, duality_rank, heawood, kronecker_cover, line_graph, quotient_census,
};
use polycyclic::voltage::{lift, rlg_b_template, rlg_gr_template, ParameterVector};

fn main() -> polycyclic::Result<()> {
    let b = lift(&rlg_b_template(3, &ParameterVector::parse(3, "1,2,1,1,1,2,1,1,2,1,1,1,2,1,0")?))?.0;
    let gr = lift(&rlg_gr_template())?.0;
    for (name, g) in [("B", &b), ("GR", &gr)] {
        let a = automorphisms(g);
        println!("{name}: |Aut| = {} = {} + {}, duality rank {:?}", a.order, a.preserving_count, a.reversing_count, duality_rank(g));
        println!("  {}", a.to_json(g));
    }

    let census = quotient_census(&gr);
    println!("L(GR): {} semiregular automorphisms", census.semiregular_count);
    for (n, bip, _, count) in &census.classes {
        println!("  quotient on {n:>2} vertices, bipartite {bip}, from {count} automorphisms");
    }

    let cover = kronecker_cover(&line_graph(heawood().graph()));
    println!("Kronecker cover of L(Heawood) is L(GR): {}", are_isomorphic(&cover, &gr, true));
    Ok(())
}
