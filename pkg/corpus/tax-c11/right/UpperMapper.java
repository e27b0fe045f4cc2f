package fn;

public class UpperMapper implements Mapper {
    public String map(String in) {
        return in;
    }
}
