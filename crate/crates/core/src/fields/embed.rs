use super::{Field, Fq};
use crate::error::{Error, Result};

/// The inclusion `F_{p^r} -> F_{p^{r m}}`, determined by the image of the
/// power-basis generator.
#[derive(Clone, Debug)]
pub struct Embedding {
    src: Field,
    dst: Field,
    image_of_generator: Fq,
    table: Vec<Fq>,
    preimage: Vec<Option<Fq>>,
}

impl Embedding {
    pub fn new(src: &Field, dst: &Field) -> Result<Embedding> {
        if src.p() != dst.p() || !dst.r().is_multiple_of(src.r()) {
            return Err(Error::NoEmbedding {
                src: src.q() as u64,
                dst: dst.q() as u64,
                src_r: src.r(),
                dst_r: dst.r(),
            });
        }
        let modulus: Vec<Fq> = src.modulus().iter().map(|&c| Fq(c)).collect();
        // smallest-index root of the source modulus in the destination
        let root = dst
            .elements()
            .find(|&t| {
                let mut acc = Fq::ZERO;
                for &c in modulus.iter().rev() {
                    acc = dst.add(dst.mul(acc, t), c);
                }
                acc.is_zero()
            })
            .expect("a root exists whenever the degree divides");
        let mut table = Vec::with_capacity(src.q() as usize);
        for a in src.elements() {
            let mut acc = Fq::ZERO;
            for &c in src.coeffs(a).iter().rev() {
                acc = dst.add(dst.mul(acc, root), Fq(c));
            }
            table.push(acc);
        }
        let mut preimage = vec![None; dst.q() as usize];
        for (i, &img) in table.iter().enumerate() {
            preimage[img.0 as usize] = Some(Fq(i as u32));
        }
        let emb = Embedding {
            src: src.clone(),
            dst: dst.clone(),
            image_of_generator: root,
            table,
            preimage,
        };
        emb.verify_homomorphism()?;
        Ok(emb)
    }

    pub fn identity(field: &Field) -> Embedding {
        Embedding {
            src: field.clone(),
            dst: field.clone(),
            image_of_generator: field.generator(),
            table: field.elements().collect(),
            preimage: field.elements().map(Some).collect(),
        }
    }

    fn verify_homomorphism(&self) -> Result<()> {
        let (s, d) = (&self.src, &self.dst);
        let elems: Vec<Fq> = if s.q() <= 256 {
            s.elements().collect()
        } else {
            let step = (s.q() / 97).max(1);
            (0..s.q()).step_by(step as usize).map(Fq).collect()
        };
        for &a in &elems {
            for &b in &elems {
                if self.map(s.add(a, b)) != d.add(self.map(a), self.map(b))
                    || self.map(s.mul(a, b)) != d.mul(self.map(a), self.map(b))
                {
                    return Err(Error::Verification(format!(
                        "embedding {:?} -> {:?} is not a ring homomorphism",
                        s, d
                    )));
                }
            }
        }
        let injective = self.preimage.iter().filter(|x| x.is_some()).count() == s.q() as usize;
        if !injective {
            return Err(Error::Verification("embedding is not injective".into()));
        }
        Ok(())
    }

    pub fn src(&self) -> &Field {
        &self.src
    }

    pub fn dst(&self) -> &Field {
        &self.dst
    }

    pub fn image_of_generator(&self) -> Fq {
        self.image_of_generator
    }

    pub fn map(&self, a: Fq) -> Fq {
        self.table[a.0 as usize]
    }

    /// The source element mapping to `b`, if `b` lies in the image.
    pub fn preimage(&self, b: Fq) -> Option<Fq> {
        self.preimage[b.0 as usize]
    }

    /// Compose `self: A -> B` with `next: B -> C`.
    pub fn then(&self, next: &Embedding) -> Result<Embedding> {
        if self.dst != *next.src() {
            return Err(Error::FieldMismatch);
        }
        Embedding::new(&self.src, next.dst())
    }
}
