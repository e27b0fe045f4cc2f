package fn;

public class UpperMapper implements Mapper {
    public String transform(String in) {
        return in;
    }
}
