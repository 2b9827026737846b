//! Built-in groups, groups from tables and permutations, and subgroup lattices.

use std::sync::Arc;

use halg::catalog;
use halg::subgroup::all_subgroups;
use halg::FiniteGroup;

pub fn run_example() -> halg::Result<()> {
    for name in catalog::names() {
        let g = catalog::group(&name)?;
        let subs = all_subgroups(&g)?;
        let normal = subs.iter().filter(|h| h.is_normal()).count();
        println!(
            "{name:>4}  order {:>2}  {:<9} {:>2} subgroups, {:>2} normal",
            g.order(),
            if g.is_abelian() { "abelian" } else { "nonabelian" },
            subs.len(),
            normal
        );
    }

    // Klein four-group from its Cayley table.
    let table = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
    let names = ["e", "a", "b", "c"].map(String::from).to_vec();
    let v4 = FiniteGroup::from_table(table, Some(names))?.with_name("V4");
    println!("{}: a*b = {}", v4.name(), v4.element_name(v4.mul(v4.find("a")?, v4.find("b")?)));

    // A non-associative Latin square is rejected.
    let loop5 = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    println!("order-5 loop: {}", FiniteGroup::from_table(loop5, None).unwrap_err());

    // S3 from generators, in cycle notation.
    let s3 = Arc::new(FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]])?);
    for h in all_subgroups(&s3)? {
        let members: Vec<&str> = h.members().iter().map(|&x| s3.element_name(x)).collect();
        println!("S3 > {:<14} {:?} normal={}", h.label(), members, h.is_normal());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("group_catalog");
}
