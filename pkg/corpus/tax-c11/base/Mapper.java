package fn;

public interface Mapper {
    String map(String in);
}
