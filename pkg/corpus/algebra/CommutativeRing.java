package algebra;

interface CommutativeRing <T>
    extends AdditiveGroup <T>,
            MultiplicativeMonoid <T> {

}
