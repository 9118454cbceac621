use poset_homology::complex::poset_complex;
use poset_homology::random::random_instance;
use poset_homology::ring::Integers;
use poset_homology::verify::verify_main;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (lattice, data) = random_instance(9, 2, 2);

    let report = verify_main(&lattice, &data)?;
    assert!(report.ok);

    let colouring = data.over(&Integers)?;
    let homology = poset_complex(&colouring)?.homology()?;
    for (n, group) in homology.groups.iter().enumerate() {
        println!("H_{n} = {group}");
    }
    Ok(())
}
