//! Decides whether a few Chebyshev triples are embeddings and prints the
//! polynomial identity exhibiting `t` in the generated algebra.

use chebknot::algebra::{embedding_witness, is_embedding, pgcd, Triple};

fn main() {
    for t in [Triple::new(3, 4, 5), Triple::new(3, 5, 7), Triple::new(5, 7, 9), Triple::new(2, 4, 6), Triple::new(4, 6, 9)] {
        print!("{t}: pgcd {}, embedding {}", pgcd(t), is_embedding(t));
        match embedding_witness(t) {
            Ok(w) => {
                let (i, j, k) = w.roles(t);
                println!(
                    "\n    t = 2 T_{}(T_{j}) T_{}(T_{k}) - T_{}(T_{i})   degree {}, verified {}",
                    w.a,
                    w.b,
                    w.c,
                    w.degree(t),
                    w.verify(t)
                );
            }
            Err(e) => println!("\n    no witness: {e}"),
        }
    }
}
