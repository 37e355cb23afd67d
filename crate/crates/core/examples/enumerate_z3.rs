//! Sweeps all 3^15 template voltages over Z_3 and lists the Levi graph classes.

use polycyclic::voltage::{configuration_count, enumerate, EnumerationFilters};

fn main() {
    let stats = enumerate(3, EnumerationFilters::default());
    println!("{} vectors, {} pass the girth test", stats.total, stats.girth_survivors);
    for r in &stats.records {
        println!("{}  |Aut| = {:>3}  self-dual: {}", r.params, r.aut_order, r.self_dual);
    }
    println!("{} Levi graphs, {} configurations", stats.records.len(), configuration_count(&stats.records));
}
