package fn;

public interface Mapper {
    String transform(String in);
}
