use hilbgrass::{component_report, hilbert_poly, pieri, rat_int, BoxContext, Error};

fn main() -> Result<(), Error> {
    let report = component_report(3, 2, 4, 2)?;
    assert_eq!(report.count(), 2);
    assert!(report.classes_coincide());

    let p = hilbert_poly(3, 2); // 3*T
    assert_eq!(p.eval(5), rat_int(15));

    let ctx = BoxContext::new(2, 4)?;
    let class = ctx.validate_partition(&[2, 0])?;
    let product = pieri(1, &class, ctx)?;
    println!("{product}"); // sigma[2,1]
    Ok(())
}
